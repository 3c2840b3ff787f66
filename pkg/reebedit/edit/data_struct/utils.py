# -*- coding: UTF-8 -*-
################################################################################
#
#   Copyright (c) 2026  The reebedit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#################################################################################
"""
本文件定义了使用到的工具类和函数
"""
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import logging
import logging.handlers
import os
from fractions import Fraction

import numpy as np

from reebedit.edit.data_struct.errors import GraphFormatError

_LOG_HANDLER_TAG = "_reebedit_handler"


def parse_label(value):
    """Parse a label given as a decimal string, a "p/q" string or an integer

    Args:
        value: str or int

    Returns:
        label: Fraction
    """
    if isinstance(value, bool) or not isinstance(value, (str, int, Fraction)):
        raise GraphFormatError("label must be a decimal string, got {!r}".format(value))
    if isinstance(value, str):
        value = value.strip()
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError):
        raise GraphFormatError("malformed label {!r}".format(value))


def format_label(value):
    """Render a label exactly: a terminating decimal if there is one, otherwise "p/q"

    Args:
        value: Fraction or int

    Returns:
        text: str
    """
    value = Fraction(value)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return "{}/{}".format(value.numerator, value.denominator)
    digits = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** digits // value.denominator
    sign = "-" if value < 0 else ""
    if digits == 0:
        return sign + str(scaled)
    text = str(scaled).rjust(digits + 1, "0")
    return "{}{}.{}".format(sign, text[:-digits], text[-digits:])


def midpoint(a, b):
    """midpoint"""
    return (Fraction(a) + Fraction(b)) / 2


def fresh_id(prefix, taken):
    """Returns the first id of the form prefix + n that is not in taken"""
    index = 0
    while "{}{}".format(prefix, index) in taken:
        index += 1
    return "{}{}".format(prefix, index)


def gf2_rank(rows):
    """Rank of a 0/1 matrix over GF(2)

    Args:
        rows: list of equal-length 0/1 sequences

    Returns:
        rank: int
    """
    matrix = np.array(rows, dtype=np.uint8) % 2
    if matrix.size == 0:
        return 0
    n_rows, n_cols = matrix.shape
    rank = 0
    for col in range(n_cols):
        pivots = np.nonzero(matrix[rank:, col])[0]
        if len(pivots) == 0:
            continue
        pivot = rank + pivots[0]
        if pivot != rank:
            matrix[[rank, pivot]] = matrix[[pivot, rank]]
        mask = matrix[:, col].astype(bool)
        mask[rank] = False
        matrix[mask] ^= matrix[rank]
        rank += 1
        if rank == n_rows:
            break
    return rank


class UnionFind(object):
    """Union-find over hashable items with path compression"""
    def __init__(self, items=()):
        self.parents = {}
        for item in items:
            self.add(item)

    def add(self, item):
        """add a singleton"""
        self.parents.setdefault(item, item)

    def __contains__(self, item):
        return item in self.parents

    def find(self, item):
        """find the root of item"""
        root = item
        while root != self.parents[root]:
            root = self.parents[root]
        # compress
        while item != root:
            self.parents[item], item = root, self.parents[item]
        return root

    def union(self, a, b):
        """merge b's component into a's, returns the surviving root"""
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parents[rb] = ra
        return ra


def init_log(log_path,
             level=logging.INFO,
             when="D",
             backup=7,
             format="%(levelname)s: %(asctime)s: %(filename)s:%(lineno)d * %(thread)d %(message)s",
             datefmt="%m-%d %H:%M:%S"):
    """initialize log module"""
    formatter = logging.Formatter(format, datefmt)
    logger = logging.getLogger()
    logger.setLevel(level)
    for handler in list(logger.handlers):
        if getattr(handler, _LOG_HANDLER_TAG, False):
            logger.removeHandler(handler)
            handler.close()

    dir = os.path.dirname(log_path)
    if dir and not os.path.isdir(dir):
        os.makedirs(dir)

    handler = logging.handlers.TimedRotatingFileHandler(log_path + ".log", when=when, backupCount=backup)
    handler.setLevel(level)
    handler.setFormatter(formatter)
    setattr(handler, _LOG_HANDLER_TAG, True)
    logger.addHandler(handler)

    handler = logging.handlers.TimedRotatingFileHandler(log_path + ".log.wf", when=when, backupCount=backup)
    handler.setLevel(logging.WARNING)
    handler.setFormatter(formatter)
    setattr(handler, _LOG_HANDLER_TAG, True)
    logger.addHandler(handler)
