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
本文件定义了六种基本形变（B、D、R、K1、K2、K3）的数据结构
"""

from collections import namedtuple
from fractions import Fraction

UP = "up"
DOWN = "down"


def _renamer(mapping):
    return lambda v: mapping.get(v, v)


class Birth(namedtuple("Birth", ["edge", "new_ids", "new_labels", "attach"])):
    """Insert a saddle and a leaf on edge; attach names the new degree-1 vertex"""
    __slots__ = ()
    kind = "B"

    @property
    def leaf(self):
        """the degree-1 vertex"""
        return self.attach

    @property
    def saddle(self):
        """the degree-3 vertex"""
        return self.new_ids[1] if self.attach == self.new_ids[0] else self.new_ids[0]

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        return Birth(tuple(map(r, self.edge)), tuple(map(r, self.new_ids)), self.new_labels, r(self.attach))


class Death(namedtuple("Death", ["u1", "u2"])):
    """Remove the saddle u1 together with its leaf u2"""
    __slots__ = ()
    kind = "D"

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        return Death(r(self.u1), r(self.u2))


class Relabel(namedtuple("Relabel", ["new_labels"])):
    """Change labels; new_labels maps vertex ids to their target labels, unlisted vertices keep theirs"""
    __slots__ = ()
    kind = "R"

    @classmethod
    def identity(cls):
        """the relabel that changes nothing"""
        return cls({})

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        return Relabel(dict((r(v), label) for v, label in self.new_labels.items()))


class K1(namedtuple("K1", ["u1", "u2", "new_labels", "orientation", "moved"])):
    """Swap two saddles of the same kind; moved is the neighbor of u2 that changes sides"""
    __slots__ = ()
    kind = "K1"

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        moved = None if self.moved is None else r(self.moved)
        return K1(r(self.u1), r(self.u2), self.new_labels, self.orientation, moved)


K1.__new__.__defaults__ = (None, )


class K2(namedtuple("K2", ["u1", "u2", "new_labels", "moved_low", "moved_high"])):
    """Lift a joining saddle u1 above the splitting saddle u2"""
    __slots__ = ()
    kind = "K2"

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        low = None if self.moved_low is None else r(self.moved_low)
        high = None if self.moved_high is None else r(self.moved_high)
        return K2(r(self.u1), r(self.u2), self.new_labels, low, high)


K2.__new__.__defaults__ = (None, None)


class K3(namedtuple("K3", ["u1", "u2", "new_labels"])):
    """Lower the joining saddle u1 below the splitting saddle u2"""
    __slots__ = ()
    kind = "K3"

    def rename(self, mapping):
        """rename"""
        r = _renamer(mapping)
        return K3(r(self.u1), r(self.u2), self.new_labels)


OP_TYPES = dict((cls.kind, cls) for cls in (Birth, Death, Relabel, K1, K2, K3))
ALL_KINDS = ("B", "D", "R", "K1", "K2", "K3")


def pair(labels):
    """normalize a two-label field to a tuple of Fractions"""
    a, b = labels
    return Fraction(a), Fraction(b)
