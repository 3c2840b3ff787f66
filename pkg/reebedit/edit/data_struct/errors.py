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
本文件定义了编辑演算中使用的异常类
"""


class ReebError(Exception):
    """Base class of every domain error raised by reebedit"""


class GraphFormatError(ReebError, ValueError):
    """A graph, sequence or diagram file could not be parsed"""


class InvalidGraph(ReebError):
    """The graph is not a valid labeled Reeb graph"""
    def __init__(self, report):
        self.report = report
        messages = "; ".join(v.message for v in report.violations)
        super(InvalidGraph, self).__init__("invalid graph: {}".format(messages))


class UnknownVertex(ReebError, KeyError):
    """unknown vertex id"""
    def __init__(self, vertex):
        self.vertex = vertex
        super(UnknownVertex, self).__init__(vertex)

    def __str__(self):
        return "unknown vertex {!r}".format(self.vertex)


class LabelCollision(ReebError):
    """Two vertices would share a label"""
    def __init__(self, label, vertices=()):
        self.label = label
        self.vertices = tuple(vertices)
        super(LabelCollision, self).__init__("label {} used by more than one vertex {}".format(
            label, list(self.vertices)))


class PreconditionViolated(ReebError):
    """An edit op is not applicable to the graph"""
    def __init__(self, rule, details=""):
        self.rule = rule
        self.details = details
        super(PreconditionViolated, self).__init__("{}: {}".format(rule, details) if details else rule)


class SequenceError(ReebError):
    """Replay failure, carrying the index of the first failing op"""
    def __init__(self, index, cause):
        self.index = index
        self.cause = cause
        super(SequenceError, self).__init__("op #{} failed: {}".format(index, cause))


class InconsistentPair(ReebError):
    """before/after graphs do not match the op"""


class GenusMismatch(ReebError):
    """The graphs belong to surfaces of different genus"""
    def __init__(self, genus1, genus2):
        self.genus1 = genus1
        self.genus2 = genus2
        super(GenusMismatch, self).__init__("genus mismatch {} vs {}".format(genus1, genus2))


class SizeCapExceeded(ReebError):
    """Input too large for the exhaustive oracle"""


class StepBudgetExceeded(ReebError):
    """A constructive procedure ran out of its step budget"""
    def __init__(self, budget):
        self.budget = budget
        super(StepBudgetExceeded, self).__init__("step budget of {} ops exceeded".format(budget))
