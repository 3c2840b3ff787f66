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
本文件定义了带标号的Reeb图及其校验、分类与同构判定
"""

import bisect
import enum
from collections import Counter
from collections import defaultdict
from collections import namedtuple
from fractions import Fraction

import networkx as nx

from reebedit.edit.data_struct.errors import InvalidGraph
from reebedit.edit.data_struct.errors import UnknownVertex
from reebedit.edit.data_struct.utils import format_label


class VertexClass(enum.Enum):
    """Critical point type of a vertex"""
    MINIMUM = "minimum"
    MAXIMUM = "maximum"
    JOINING_SADDLE = "joining_saddle"
    SPLITTING_SADDLE = "splitting_saddle"


Violation = namedtuple("Violation", ["rule", "ids", "message"])


class ValidationReport(object):
    """Outcome of validate: ok iff there are no violations"""
    def __init__(self, violations=()):
        self.violations = list(violations)

    @property
    def ok(self):
        """ok"""
        return not self.violations

    def rules(self):
        """names of the violated rules"""
        return sorted(set(v.rule for v in self.violations))

    def to_json(self):
        """json style result"""
        return {
            "ok": self.ok,
            "violations": [{
                "rule": v.rule,
                "ids": list(v.ids),
                "message": v.message
            } for v in self.violations],
        }

    def __repr__(self):
        """repr"""
        return "ValidationReport(ok={}, violations={})".format(self.ok, self.violations)


def edge_key(a, b):
    """unordered edge as a sorted pair"""
    return (a, b) if a <= b else (b, a)


class LabeledReebGraph(object):
    """Multigraph with one exact label per vertex.

    Instances are immutable: every edit returns a new graph. Construction accepts any
    structure so that validate can report on it.

    Args:
        labels: dict, vertex id -> label
        edges: iterable of id pairs, parallel edges repeated
    """
    def __init__(self, labels, edges):
        self._labels = dict((v, Fraction(label)) for v, label in labels.items())
        self._edges = Counter(edge_key(a, b) for a, b in edges)
        self._adjacency = defaultdict(list)
        for (a, b), count in self._edges.items():
            for _ in range(count):
                self._adjacency[a].append(b)
                self._adjacency[b].append(a)
        self._order = sorted(self._labels, key=lambda v: (self._labels[v], v))
        self._sorted_labels = [self._labels[v] for v in self._order]
        self._index = dict((v, i) for i, v in enumerate(self._order))
        self._report = None

    @property
    def vertices(self):
        """vertex ids in increasing label order"""
        return tuple(self._order)

    @property
    def labels(self):
        """copy of the labeling"""
        return dict(self._labels)

    @property
    def num_vertices(self):
        """|V|"""
        return len(self._labels)

    @property
    def num_edges(self):
        """|E| counted with multiplicity"""
        return sum(self._edges.values())

    def __contains__(self, vertex):
        return vertex in self._labels

    def label(self, vertex):
        """label of vertex"""
        try:
            return self._labels[vertex]
        except KeyError:
            raise UnknownVertex(vertex)

    def edges(self):
        """sorted edge list, parallel edges repeated"""
        return [key for key in sorted(self._edges) for _ in range(self._edges[key])]

    def edge_counts(self):
        """edge multiset as a Counter"""
        return Counter(self._edges)

    def multiplicity(self, a, b):
        """number of parallel edges between a and b"""
        return self._edges.get(edge_key(a, b), 0)

    def neighbors(self, vertex):
        """neighbor slots of vertex sorted by label, with multiplicity"""
        if vertex not in self._labels:
            raise UnknownVertex(vertex)
        return sorted(self._adjacency.get(vertex, []), key=lambda w: (self._labels.get(w, 0), w))

    def degree(self, vertex):
        """degree counting multiplicity"""
        if vertex not in self._labels:
            raise UnknownVertex(vertex)
        return len(self._adjacency.get(vertex, []))

    def lower_slots(self, vertex):
        """neighbor slots labeled below vertex"""
        own = self.label(vertex)
        return [w for w in self.neighbors(vertex) if self._labels[w] < own]

    def upper_slots(self, vertex):
        """neighbor slots labeled above vertex"""
        own = self.label(vertex)
        return [w for w in self.neighbors(vertex) if self._labels[w] > own]

    def rank(self, vertex):
        """position of vertex in the label order"""
        if vertex not in self._index:
            raise UnknownVertex(vertex)
        return self._index[vertex]

    def predecessor(self, vertex):
        """vertex with the next lower label, or None"""
        i = self.rank(vertex)
        return self._order[i - 1] if i > 0 else None

    def successor(self, vertex):
        """vertex with the next higher label, or None"""
        i = self.rank(vertex)
        return self._order[i + 1] if i + 1 < len(self._order) else None

    def vertex_at(self, label):
        """vertex carrying exactly this label, or None"""
        i = bisect.bisect_left(self._sorted_labels, label)
        if i < len(self._sorted_labels) and self._sorted_labels[i] == label:
            return self._order[i]
        return None

    def labels_between(self, low, high, ignore=()):
        """vertices whose label lies strictly between low and high (in either order)"""
        low, high = min(low, high), max(low, high)
        start = bisect.bisect_right(self._sorted_labels, low)
        stop = bisect.bisect_left(self._sorted_labels, high)
        return [v for v in self._order[start:stop] if v not in ignore]

    def gap_empty(self, low, high, ignore=()):
        """True iff no label lies strictly between low and high"""
        return not self.labels_between(low, high, ignore)

    def leaves(self):
        """degree-1 vertices in label order"""
        return [v for v in self._order if len(self._adjacency.get(v, [])) == 1]

    def min_gap(self):
        """smallest difference between two consecutive labels, None below two vertices"""
        gaps = [b - a for a, b in zip(self._sorted_labels, self._sorted_labels[1:])]
        return min(gaps) if gaps else None

    def rewrite(self, remove_vertices=(), add_vertices=None, remove_edges=(), add_edges=(), relabel=None):
        """Returns a new graph with the given vertex, edge and label changes"""
        labels = dict(self._labels)
        for v in remove_vertices:
            del labels[v]
        labels.update(add_vertices or {})
        labels.update(relabel or {})
        edges = Counter(self._edges)
        for a, b in remove_edges:
            key = edge_key(a, b)
            if edges[key] <= 0:
                raise ValueError("edge {} not present".format(key))
            edges[key] -= 1
        for a, b in add_edges:
            edges[edge_key(a, b)] += 1
        return LabeledReebGraph(labels, edges.elements())

    def key(self):
        """label-forced isomorphism key: sorted labels plus the edge multiset over labels"""
        pairs = sorted(
            tuple(sorted((self._labels[a], self._labels[b]))) for (a, b), count in self._edges.items()
            for _ in range(count))
        return tuple(self._sorted_labels), tuple(pairs)

    def to_networkx(self):
        """networkx MultiGraph view, edges only between known vertices"""
        graph = nx.MultiGraph()
        for v in self._order:
            graph.add_node(v, label=self._labels[v])
        for a, b in self.edges():
            if a in self._labels and b in self._labels:
                graph.add_edge(a, b)
        return graph

    def __eq__(self, other):
        if not isinstance(other, LabeledReebGraph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((frozenset(self._labels.items()), frozenset(self._edges.items())))

    def __repr__(self):
        """repr"""
        vertices = ", ".join("{}:{}".format(v, format_label(self._labels[v])) for v in self._order)
        edges = ", ".join("{}-{}".format(a, b) for a, b in self.edges())
        return "LabeledReebGraph([{}], [{}])".format(vertices, edges)


def validate(graph):
    """Check every structural rule of a labeled Reeb graph

    Args:
        graph: LabeledReebGraph

    Returns:
        report: ValidationReport
    """
    if graph._report is not None:
        return graph._report
    violations = []
    labels = graph._labels
    if not labels:
        violations.append(Violation("empty", (), "graph has no vertices"))
    for a, b in sorted(graph._edges):
        for end in (a, b):
            if end not in labels:
                violations.append(Violation("unknown-vertex", (a, b), "edge {}-{} uses unknown vertex {}".format(a, b, end)))
        if a == b:
            violations.append(Violation("self-loop", (a, ), "self-loop at {}".format(a)))

    by_label = defaultdict(list)
    for v in graph._order:
        by_label[labels[v]].append(v)
    for label, owners in sorted(by_label.items()):
        if len(owners) > 1:
            violations.append(
                Violation("duplicate-label", tuple(owners), "label {} shared by {}".format(format_label(label), owners)))

    if labels and len(labels) % 2:
        violations.append(Violation("odd-vertex-count", (), "vertex count {} is odd".format(len(labels))))
    if labels and not nx.is_connected(graph.to_networkx()):
        violations.append(Violation("disconnected", (), "graph is not connected"))

    for v in graph._order:
        slots = [w for w in graph._adjacency.get(v, []) if w in labels]
        degree = len(graph._adjacency.get(v, []))
        if degree not in (1, 3):
            violations.append(Violation("degree", (v, ), "degree {} forbidden at {}".format(degree, v)))
            continue
        lower = sum(1 for w in slots if labels[w] < labels[v])
        upper = sum(1 for w in slots if labels[w] > labels[v])
        if degree == 3 and (lower == 0 or upper == 0):
            violations.append(
                Violation("saddle-order", (v, ), "saddle {} needs neighbors both below and above".format(v)))
        elif degree == 1 and lower + upper != 1:
            violations.append(Violation("leaf-order", (v, ), "leaf {} has no strictly lower or higher neighbor".format(v)))

    graph._report = ValidationReport(violations)
    return graph._report


def check_valid(graph):
    """raise InvalidGraph unless graph validates"""
    report = validate(graph)
    if not report.ok:
        raise InvalidGraph(report)
    return graph


def genus(graph):
    """cycle rank |E| - |V| + 1 of a valid graph"""
    check_valid(graph)
    return graph.num_edges - graph.num_vertices + 1


def classify(graph, vertex):
    """Returns the VertexClass of vertex"""
    if vertex not in graph:
        raise UnknownVertex(vertex)
    check_valid(graph)
    if graph.degree(vertex) == 1:
        return VertexClass.MINIMUM if graph.upper_slots(vertex) else VertexClass.MAXIMUM
    if len(graph.upper_slots(vertex)) == 2:
        return VertexClass.SPLITTING_SADDLE
    return VertexClass.JOINING_SADDLE


def classes(graph):
    """dict vertex -> VertexClass"""
    return dict((v, classify(graph, v)) for v in graph.vertices)


def leaf_counts(graph):
    """(number of minima p, number of maxima q)"""
    check_valid(graph)
    leaves = graph.leaves()
    minima = sum(1 for v in leaves if graph.upper_slots(v))
    return minima, len(leaves) - minima


def is_minimal(graph):
    """exactly one minimum and one maximum"""
    return leaf_counts(graph) == (1, 1)


def is_canonical(graph):
    """minimal, and collapsing parallel edges leaves a tree"""
    if not is_minimal(graph):
        return False
    return nx.is_tree(nx.Graph(graph.to_networkx()))


def are_isomorphic(g1, g2):
    """Returns the label-preserving bijection g1 -> g2 if it carries edges onto edges, else None"""
    check_valid(g1)
    check_valid(g2)
    if g1._sorted_labels != g2._sorted_labels:
        return None
    mapping = dict((v, g2.vertex_at(g1.label(v))) for v in g1.vertices)
    mapped = Counter(edge_key(mapping[a], mapping[b]) for a, b in g1.edges())
    if mapped != g2.edge_counts():
        return None
    return mapping
