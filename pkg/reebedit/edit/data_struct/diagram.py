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
本文件定义了持续图与瓶颈距离结果的数据结构
"""

from fractions import Fraction

from reebedit.edit.data_struct.utils import format_label

FINITE_TYPES = ("ord0", "rel_ord0_neg")
ESSENTIAL_TYPES = ("ess0", "ess1")
POINT_TYPES = FINITE_TYPES + ESSENTIAL_TYPES


def _points(points):
    return sorted((Fraction(a), Fraction(b)) for a, b in points)


class PersistenceDiagram(object):
    """Extended persistence diagram of a labeled Reeb graph.

    ord0 and rel_ord0_neg hold (birth, death) pairs; ess0 is (min, max); ess1 holds
    (upper, lower) pairs, one per independent cycle.
    """
    def __init__(self, ord0=(), rel_ord0_neg=(), ess0=None, ess1=()):
        self.ord0 = _points(ord0)
        self.rel_ord0_neg = _points(rel_ord0_neg)
        self.ess0 = None if ess0 is None else tuple(map(Fraction, ess0))
        self.ess1 = _points(ess1)

    def points(self, kind):
        """points of one type as a list"""
        if kind == "ess0":
            return [] if self.ess0 is None else [self.ess0]
        return list(getattr(self, kind))

    def size(self):
        """largest number of points of any single type"""
        return max(len(self.points(kind)) for kind in POINT_TYPES)

    def to_json(self):
        """json style result"""
        fmt = lambda points: [[format_label(a), format_label(b)] for a, b in points]
        return {
            "ord0": fmt(self.ord0),
            "rel_ord0_neg": fmt(self.rel_ord0_neg),
            "ess0": None if self.ess0 is None else [format_label(x) for x in self.ess0],
            "ess1": fmt(self.ess1),
        }

    def __eq__(self, other):
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return all(self.points(kind) == other.points(kind) for kind in POINT_TYPES)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        """repr"""
        return "PersistenceDiagram({})".format(self.to_json())


class BottleneckValue(object):
    """Bottleneck distance with the matching realizing it.

    matching is a list of (type, point_of_d1 or None, point_of_d2 or None); None stands
    for the diagonal. infinite is set when essential classes cannot be matched.
    """
    def __init__(self, value, matching=None, infinite=False, per_type=None):
        self.value = Fraction(value)
        self.matching = matching
        self.infinite = infinite
        self.per_type = per_type or {}

    def to_json(self):
        """json style result"""
        fmt = lambda p: None if p is None else [format_label(p[0]), format_label(p[1])]
        return {
            "value": None if self.infinite else format_label(self.value),
            "infinite": self.infinite,
            "per_type": dict((k, None if v is None else format_label(v)) for k, v in sorted(self.per_type.items())),
            "matching": None if self.matching is None else [[kind, fmt(a), fmt(b)] for kind, a, b in self.matching],
        }

    def __repr__(self):
        """repr"""
        return "BottleneckValue(value={}, infinite={})".format(format_label(self.value), self.infinite)
