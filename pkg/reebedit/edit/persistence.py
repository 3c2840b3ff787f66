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
本文件计算带标号Reeb图的扩展持续图以及持续图之间的瓶颈距离
"""

import itertools
from fractions import Fraction

import networkx as nx
from networkx.algorithms import bipartite

from reebedit.edit.data_struct import BottleneckValue
from reebedit.edit.data_struct import PersistenceDiagram
from reebedit.edit.data_struct import utils
from reebedit.edit.data_struct.diagram import ESSENTIAL_TYPES
from reebedit.edit.data_struct.diagram import POINT_TYPES
from reebedit.edit.data_struct.errors import SizeCapExceeded
from reebedit.edit.data_struct.graph import check_valid

ORACLE_CAP = 7


def _merge_pairs(graph, order, below):
    """Union-find sweep along order; a vertex joining components kills all but the eldest.

    below(w, v) tells whether neighbor w is already swept when v is reached.
    Returns (birth label of the younger component, label of the merging vertex) pairs.
    """
    forest = utils.UnionFind()
    eldest = {}
    pairs = []
    for v in order:
        forest.add(v)
        roots = set(forest.find(w) for w in graph.neighbors(v) if below(w, v))
        if not roots:
            eldest[v] = v
            continue
        ranked = sorted(roots, key=lambda r: order.index(eldest[r]))
        keep = eldest[ranked[0]]
        for root in ranked[1:]:
            pairs.append((graph.label(eldest[root]), graph.label(v)))
        for root in ranked:
            forest.union(v, root)
        eldest[forest.find(v)] = keep
    return pairs


def _cycle_vectors(graph, members):
    """GF(2) basis of the cycle space of the subgraph induced on members, over edge occurrences"""
    edges = graph.edges()
    sub = nx.Graph()
    for k, (a, b) in enumerate(edges):
        if a in members and b in members:
            sub.add_edge(("v", a), ("e", k))
            sub.add_edge(("e", k), ("v", b))
    vectors = []
    for cycle in nx.cycle_basis(sub):
        row = [0] * len(edges)
        for node in cycle:
            if node[0] == "e":
                row[node[1]] = 1
        vectors.append(row)
    return vectors


def _cycle_pairs(graph):
    """Essential 1-dim pairs (upper, lower) from the intersection ranks of sub- and superlevel cycle spaces.

    r(b, a) = dim(U_b ∩ V_a) counts the cycles born by b in the upward sweep that are still alive at
    a in the downward sweep; point multiplicities follow by inclusion-exclusion.
    """
    labels = [graph.label(v) for v in graph.vertices]
    up, down = {}, {}
    for i, b in enumerate(labels):
        up[b] = _cycle_vectors(graph, set(graph.vertices[:i + 1]))
    for i, a in enumerate(labels):
        down[a] = _cycle_vectors(graph, set(graph.vertices[i:]))
    births = [b for i, b in enumerate(labels) if len(up[b]) > (len(up[labels[i - 1]]) if i else 0)]
    deaths = [a for i, a in enumerate(labels) if len(down[a]) > (len(down[labels[i + 1]]) if i + 1 < len(labels) else 0)]

    cache = {}

    def rank(i, j):
        if i < 0 or j >= len(deaths):
            return 0
        if (i, j) not in cache:
            u, v = up[births[i]], down[deaths[j]]
            cache[(i, j)] = len(u) + len(v) - utils.gf2_rank(u + v) if u and v else 0
        return cache[(i, j)]

    pairs = []
    for i, b in enumerate(births):
        for j, a in enumerate(deaths):
            count = rank(i, j) - rank(i - 1, j) - rank(i, j + 1) + rank(i - 1, j + 1)
            pairs.extend([(b, a)] * count)
    return pairs


def extended_diagram(graph):
    """Extended persistence diagram of the label function on graph

    Args:
        graph: valid LabeledReebGraph

    Returns:
        diagram: PersistenceDiagram
    """
    check_valid(graph)
    order = list(graph.vertices)
    ord0 = _merge_pairs(graph, order, lambda w, v: graph.label(w) < graph.label(v))
    rel = _merge_pairs(graph, order[::-1], lambda w, v: graph.label(w) > graph.label(v))
    ess0 = (graph.label(order[0]), graph.label(order[-1]))
    ess1 = _cycle_pairs(graph)
    assert len(ess1) == graph.num_edges - graph.num_vertices + 1
    return PersistenceDiagram(ord0=ord0, rel_ord0_neg=rel, ess0=ess0, ess1=ess1)


def reduction_diagram(graph):
    """Extended diagram by boundary-matrix reduction of the coned filtration over GF(2).

    The filtration adds a cone vertex, then the graph by increasing label (each vertex followed
    by its edges to lower vertices), then the cone over the graph by decreasing label.
    """
    check_valid(graph)
    simplices = [("cone", None, 0, None)]
    boundaries = [set()]
    index = {("cone", None): 0}

    def add(kind, name, dim, value, boundary):
        index[(kind, name)] = len(simplices)
        simplices.append((kind, name, dim, value))
        boundaries.append(set(boundary))

    edges = list(enumerate(graph.edges()))
    for v in graph.vertices:
        add("v", v, 0, graph.label(v), ())
        lower = sorted((k, e) for k, e in edges if v in e and graph.label(e[0] if e[1] == v else e[1]) < graph.label(v))
        for k, (a, b) in lower:
            add("e", k, 1, graph.label(v), [index[("v", a)], index[("v", b)]])
    for v in reversed(graph.vertices):
        add("cv", v, 1, graph.label(v), [0, index[("v", v)]])
        for k, (a, b) in edges:
            if v in (a, b) and graph.label(b if a == v else a) > graph.label(v):
                add("ce", k, 2, graph.label(v), [index[("e", k)], index[("cv", a)], index[("cv", b)]])

    owner = {}
    reduced = []
    pairs = []
    for j, boundary in enumerate(boundaries):
        column = set(boundary)
        while column and max(column) in owner:
            column ^= reduced[owner[max(column)]]
        reduced.append(column)
        if column:
            owner[max(column)] = j
            pairs.append((max(column), j))

    found = dict((kind, []) for kind in POINT_TYPES)
    for i, j in pairs:
        (ki, _, _, vi), (kj, _, _, vj) = simplices[i], simplices[j]
        if vi == vj:
            continue
        if ki == "v" and kj == "e":
            found["ord0"].append((vi, vj))
        elif ki == "v" and kj == "cv":
            found["ess0"].append((vi, vj))
        elif ki == "cv" and kj == "ce":
            found["rel_ord0_neg"].append((vi, vj))
        elif ki == "e" and kj == "ce":
            found["ess1"].append((vi, vj))
    ess0 = found["ess0"][0] if found["ess0"] else (graph.label(graph.vertices[0]), graph.label(graph.vertices[-1]))
    return PersistenceDiagram(ord0=found["ord0"], rel_ord0_neg=found["rel_ord0_neg"], ess0=ess0, ess1=found["ess1"])


def _linf(p, q):
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _to_diagonal(p):
    return abs(p[1] - p[0]) / 2


def _feasible(left, right, radius, essential):
    """perfect matching within radius, diagonal copies allowed unless essential"""
    graph = nx.Graph()
    top = [("a", i) for i in range(len(left))]
    bottom = [("b", j) for j in range(len(right))]
    if not essential:
        top += [("db", j) for j in range(len(right))]
        bottom += [("da", i) for i in range(len(left))]
    graph.add_nodes_from(top)
    graph.add_nodes_from(bottom)
    for i, p in enumerate(left):
        for j, q in enumerate(right):
            if _linf(p, q) <= radius:
                graph.add_edge(("a", i), ("b", j))
    if not essential:
        for i, p in enumerate(left):
            if _to_diagonal(p) <= radius:
                graph.add_edge(("a", i), ("da", i))
        for j, q in enumerate(right):
            if _to_diagonal(q) <= radius:
                graph.add_edge(("db", j), ("b", j))
        for i, j in itertools.product(range(len(left)), range(len(right))):
            graph.add_edge(("db", j), ("da", i))
    matching = bipartite.hopcroft_karp_matching(graph, top_nodes=top)
    if sum(1 for node in top if node in matching) != len(top):
        return None
    return [(node, matching[node]) for node in top]


def _type_bottleneck(kind, left, right):
    essential = kind in ESSENTIAL_TYPES
    if essential and len(left) != len(right):
        return None, None
    if not left and not right:
        return Fraction(0), []
    radii = set([Fraction(0)])
    radii.update(_linf(p, q) for p in left for q in right)
    if not essential:
        radii.update(_to_diagonal(p) for p in left + right)
    radii = sorted(radii)
    lo, hi = 0, len(radii) - 1
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(left, right, radii[mid], essential) is not None:
            hi = mid
        else:
            lo = mid + 1
    pairs = []
    for (side, i), (other, j) in _feasible(left, right, radii[lo], essential):
        if side == "a" and other == "b":
            pairs.append((kind, left[i], right[j]))
        elif side == "a":
            pairs.append((kind, left[i], None))
        elif other == "b":
            pairs.append((kind, None, right[j]))
    return radii[lo], pairs


def _combine(per_type, matchings):
    finite = [v for v in per_type.values() if v is not None]
    infinite = any(v is None for v in per_type.values())
    value = max(finite) if finite else Fraction(0)
    return BottleneckValue(value, None if infinite else matchings, infinite, per_type)


def bottleneck(d1, d2):
    """Bottleneck distance between two extended diagrams, matched type by type

    Returns:
        value: BottleneckValue; infinite when essential classes differ in number, value then
            covering the finite types only
    """
    per_type, matchings = {}, []
    for kind in POINT_TYPES:
        value, pairs = _type_bottleneck(kind, d1.points(kind), d2.points(kind))
        per_type[kind] = value
        matchings.extend(pairs or [])
    return _combine(per_type, matchings)


def _assignments(left, right, essential):
    """every matching of left into right, unmatched points going to the diagonal"""
    if not left:
        yield [(None, q) for q in right] if not essential or not right else None
        return
    head, rest = left[0], left[1:]
    if not essential:
        for tail in _assignments(rest, right, essential):
            if tail is not None:
                yield [(head, None)] + tail
    for j, q in enumerate(right):
        for tail in _assignments(rest, right[:j] + right[j + 1:], essential):
            if tail is not None:
                yield [(head, q)] + tail


def _pair_cost(p, q):
    if p is None:
        return _to_diagonal(q)
    if q is None:
        return _to_diagonal(p)
    return _linf(p, q)


def bottleneck_oracle(d1, d2, cap=ORACLE_CAP):
    """Exhaustive bottleneck over all matchings; for cross-checking on small diagrams"""
    per_type, matchings = {}, []
    for kind in POINT_TYPES:
        left, right = d1.points(kind), d2.points(kind)
        if len(left) > cap or len(right) > cap:
            raise SizeCapExceeded("{} has more than {} points".format(kind, cap))
        if kind in ESSENTIAL_TYPES and len(left) != len(right):
            per_type[kind] = None
            continue
        best = None
        for assignment in _assignments(left, right, kind in ESSENTIAL_TYPES):
            if assignment is None:
                continue
            value = max([_pair_cost(p, q) for p, q in assignment] or [Fraction(0)])
            if best is None or value < best[0]:
                best = (value, assignment)
        per_type[kind] = best[0]
        matchings.extend((kind, p, q) for p, q in best[1])
    return _combine(per_type, matchings)
