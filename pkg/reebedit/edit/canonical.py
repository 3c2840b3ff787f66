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
本文件实现路径约化、圈约化、极小化、规范化以及同亏格图之间的构造性连接
"""

import logging
from collections import defaultdict
from collections import namedtuple

import networkx as nx

from reebedit.edit import deform
from reebedit.edit.data_struct import Death
from reebedit.edit.data_struct import K1
from reebedit.edit.data_struct import K3
from reebedit.edit.data_struct import Relabel
from reebedit.edit.data_struct import VertexClass
from reebedit.edit.data_struct import utils
from reebedit.edit.data_struct.errors import GenusMismatch
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.errors import StepBudgetExceeded
from reebedit.edit.data_struct.errors import UnknownVertex
from reebedit.edit.data_struct.graph import check_valid
from reebedit.edit.data_struct.graph import classify
from reebedit.edit.data_struct.graph import edge_key
from reebedit.edit.data_struct.graph import genus
from reebedit.edit.data_struct.graph import is_canonical
from reebedit.edit.data_struct.graph import leaf_counts
from reebedit.edit.data_struct.ops import DOWN
from reebedit.edit.data_struct.ops import UP
from reebedit.edit.deform import DeformationSequence

CanonicalizationResult = namedtuple("CanonicalizationResult", ["canonical_graph", "sequence", "rounds"])


class _Recorder(object):
    """Applies ops one by one, keeping the sequence and enforcing the step budget"""
    def __init__(self, graph, max_steps=None):
        self.graph = graph
        self.seq = DeformationSequence()
        self.max_steps = max_steps

    def apply(self, op):
        """apply"""
        if self.max_steps is not None and len(self.seq) >= self.max_steps:
            raise StepBudgetExceeded(self.max_steps)
        self.graph = deform.apply(self.graph, op)
        self.seq.append(op)

    def key(self, sign):
        """label scaled by sign, so that sign=-1 mirrors the order"""
        return lambda v: sign * self.graph.label(v)


def _slide(rec, v, step, passes):
    """Move v one order position at a time in direction step (+1 up, -1 down) while passes(next) holds.

    Each move is an R op swapping v with its order neighbor y; v lands at the midpoint of y and
    the vertex beyond y.
    """
    while True:
        graph = rec.graph
        y = graph.successor(v) if step > 0 else graph.predecessor(v)
        if y is None or not passes(y):
            return
        beyond = graph.successor(y) if step > 0 else graph.predecessor(y)
        if beyond is None:
            target = graph.label(y) + step * abs(graph.label(y) - graph.label(v))
        else:
            target = utils.midpoint(graph.label(y), graph.label(beyond))
        rec.apply(Relabel({v: target}))


def _reduce_walk(rec, walk, closed, sign):
    """Shorten walk until its two ends share a neighbor.

    walk is a simple path between two leaves of the same kind, or a closed cycle whose first
    and last entries are its lowest vertex. sign=+1 reduces toward the bottom (minima, cycles),
    sign=-1 mirrors everything for maxima. A round uses R ops and one K1 or K3; it removes one vertex
    from the walk, or turns a valley next to the peak into a monotone segment.
    """
    walk = list(walk)
    rounds = 0
    while len(walk) > 3:
        key = rec.key(sign)
        interior = range(1, len(walk) - 1)
        i = max(interior, key=lambda j: key(walk[j]))
        w = walk[i]
        around = [j for j in (i - 1, i + 1) if 0 < j < len(walk) - 1]
        if not closed:
            for j in (i - 1, i + 1):
                if j in around:
                    continue
                # endpoint leaf hanging on the peak: move it below the other neighbor
                n = walk[2 * i - j]
                _slide(rec, walk[j], -sign, lambda y, n=n: key(y) >= key(n))
        j = max(around, key=lambda k: key(walk[k]))
        a, nxt = walk[j], walk[2 * j - i]
        if key(nxt) < key(a):
            _exchange(rec, w, a, nxt, sign)
            drop = j
        else:
            # a is a valley whose continuation nxt still lies below w: mirror the exchange at a
            k = 2 * j - i
            beyond = walk[2 * k - j]
            _exchange(rec, a, nxt, beyond, -sign)
            drop = k if rec.graph.multiplicity(a, beyond) else None
        if drop is None:
            logging.debug("walk round {}: valley {} lifted over {}".format(rounds, a, nxt))
            continue
        del walk[drop]
        rounds += 1
    return rounds


def _exchange(rec, w, a, nxt, sign):
    """Bring w next to its lower walk neighbor a in order and exchange them with one K1 or K3.

    nxt is the walk vertex beyond a. When nxt lies below a the edge a-nxt moves to w, so a
    leaves the walk.
    """
    key = rec.key(sign)
    _slide(rec, w, -sign, lambda y: key(y) > key(a))
    graph = rec.graph
    a_up = [s for s in graph.neighbors(a) if key(s) > key(a)]
    if len(a_up) == 1:
        orientation = DOWN if sign > 0 else UP
        op = K1(w, a, (graph.label(a), graph.label(w)), orientation, nxt)
    elif sign > 0:
        op = K3(w, a, (graph.label(a), graph.label(w)))
    else:
        op = K3(a, w, (graph.label(w), graph.label(a)))
    logging.debug("exchange {} over {} via {}".format(w, a, op.kind))
    rec.apply(op)


def _leaf_sign(graph, vertex):
    cls = classify(graph, vertex)
    if cls == VertexClass.MINIMUM:
        return 1
    if cls == VertexClass.MAXIMUM:
        return -1
    return 0


def _shortest_walk(graph, u, v, sign):
    """shortest path, ties broken by the smallest peak (in sign order), then by labels"""
    nxg = graph.to_networkx()
    key = lambda path: (max([sign * graph.label(x) for x in path[1:-1]] or [0]),
                        [sign * graph.label(x) for x in path])
    return min(nx.all_shortest_paths(nxg, u, v), key=key)


def reduce_path(graph, u, v, max_steps=None):
    """Deform graph until the leaves u and v (both minima or both maxima) share a neighbor

    Returns:
        seq: DeformationSequence of R, K1 and K3 ops
    """
    check_valid(graph)
    for x in (u, v):
        if x not in graph:
            raise UnknownVertex(x)
    if u == v:
        raise PreconditionViolated("same-vertex", "endpoints coincide")
    sign = _leaf_sign(graph, u)
    if sign == 0 or sign != _leaf_sign(graph, v):
        raise PreconditionViolated("class-mismatch", "{} and {} are not two minima or two maxima".format(u, v))
    rec = _Recorder(graph, max_steps)
    _reduce_walk(rec, _shortest_walk(graph, u, v, sign), False, sign)
    return rec.seq


def _cycle_walk(graph, cycle):
    """closed vertex walk starting and ending at the lowest vertex of an edge-list cycle"""
    cycle = [tuple(e) for e in cycle]
    if len(cycle) < 2:
        raise PreconditionViolated("not-a-cycle", "a cycle needs at least two edges")
    needed = defaultdict(int)
    adjacency = defaultdict(list)
    for a, b in cycle:
        for x in (a, b):
            if x not in graph:
                raise UnknownVertex(x)
        if a == b:
            raise PreconditionViolated("not-a-cycle", "self-loop {}".format(a))
        needed[edge_key(a, b)] += 1
        adjacency[a].append(b)
        adjacency[b].append(a)
    if any(graph.multiplicity(a, b) < count for (a, b), count in needed.items()):
        raise PreconditionViolated("not-a-cycle", "edge list is not contained in the graph")
    if any(len(slots) != 2 for slots in adjacency.values()):
        raise PreconditionViolated("not-a-cycle", "every cycle vertex needs exactly two cycle edges")
    start = min(adjacency, key=graph.label)
    walk, prev, cur = [start], None, start
    for _ in range(len(cycle)):
        options = list(adjacency[cur])
        if prev is not None:
            options.remove(prev)
        prev, cur = cur, min(options, key=graph.label)
        walk.append(cur)
    if walk[-1] != start or len(set(walk[:-1])) != len(cycle):
        raise PreconditionViolated("not-a-cycle", "edge list is not a single simple cycle")
    return walk


def reduce_cycle(graph, cycle, max_steps=None):
    """Deform graph until the given cycle (an edge list) is a double edge above its lowest vertex"""
    check_valid(graph)
    walk = _cycle_walk(graph, cycle)
    rec = _Recorder(graph, max_steps)
    _reduce_walk(rec, walk, True, 1)
    return rec.seq


def _greedy_deaths(rec):
    while True:
        deaths = deform.enumerate_applicable(rec.graph, kinds=["D"])
        if not deaths:
            return
        rec.apply(deaths[0])


def _closest_pair(graph, sign):
    leaves = [v for v in graph.leaves() if _leaf_sign(graph, v) == sign]
    nxg = graph.to_networkx()
    best = None
    for i, u in enumerate(leaves):
        lengths = nx.single_source_shortest_path_length(nxg, u)
        for v in leaves[i + 1:]:
            candidate = (lengths[v], sign * graph.label(u), sign * graph.label(v), u, v)
            best = candidate if best is None or candidate < best else best
    return best[3], best[4]


def _minimalize(rec):
    rounds = 0
    while True:
        _greedy_deaths(rec)
        p, q = leaf_counts(rec.graph)
        if p == 1 and q == 1:
            return rounds
        sign = 1 if p > 1 else -1
        u, v = _closest_pair(rec.graph, sign)
        _reduce_walk(rec, _shortest_walk(rec.graph, u, v, sign), False, sign)
        key = rec.key(sign)
        near, far = (u, v) if key(u) > key(v) else (v, u)
        w = rec.graph.neighbors(near)[0]
        _slide(rec, near, sign, lambda y: y != w)
        rec.apply(Death(w, near))
        rounds += 1
        logging.info("minimalize round {}: removed {} with {} (paired with {})".format(rounds, near, w, far))


def minimalize(graph, max_steps=None):
    """Deform graph into one with a single minimum and a single maximum"""
    check_valid(graph)
    rec = _Recorder(graph, max_steps)
    rounds = _minimalize(rec)
    return CanonicalizationResult(rec.graph, rec.seq, rounds)


def _subdivided(graph):
    """simple graph with one extra node per edge occurrence, so parallel edges form 4-cycles"""
    sub = nx.Graph()
    for v in graph.vertices:
        sub.add_node(("v", v))
    for k, (a, b) in enumerate(graph.edges()):
        sub.add_edge(("v", a), ("e", k))
        sub.add_edge(("e", k), ("v", b))
    return sub


def _next_cycle(graph):
    """closed walk through the lowest vertex of the lowest block that is not a double edge"""
    sub = _subdivided(graph)
    blocks = []
    for block in nx.biconnected_components(sub):
        members = [n[1] for n in block if n[0] == "v"]
        if len(members) >= 3:
            bottom = min(members, key=graph.label)
            blocks.append((graph.label(bottom), bottom, block))
    if not blocks:
        return None
    _, bottom, block = min(blocks, key=lambda item: item[0])
    inner = sub.subgraph(block).copy()
    ends = sorted(inner.neighbors(("v", bottom)))
    inner.remove_node(("v", bottom))
    key = lambda path: (max(graph.label(n[1]) for n in path if n[0] == "v"),
                        [graph.label(n[1]) for n in path if n[0] == "v"])
    path = min(nx.all_shortest_paths(inner, ends[0], ends[1]), key=key)
    return [bottom] + [n[1] for n in path if n[0] == "v"] + [bottom]


def canonicalize(graph, max_steps=None):
    """Deform graph into a canonical one: a monotone chain of double edges between one minimum and one maximum

    Returns:
        result: CanonicalizationResult(canonical_graph, sequence, rounds), rounds counting cycle reductions
    """
    check_valid(graph)
    rec = _Recorder(graph, max_steps)
    _minimalize(rec)
    rounds = 0
    while True:
        walk = _next_cycle(rec.graph)
        if walk is None:
            break
        _reduce_walk(rec, walk, True, 1)
        rounds += 1
        logging.info("canonicalize round {}: cycle of length {} above {}".format(rounds, len(walk) - 1, walk[0]))
    assert is_canonical(rec.graph)
    return CanonicalizationResult(rec.graph, rec.seq, rounds)


def connect(g1, g2, max_steps=None):
    """Deformation sequence from g1 to a graph isomorphic to g2

    canonicalize(g1) ++ one order-preserving Relabel ++ inverse(canonicalize(g2)), the last part
    renamed into g1's vertex ids.
    """
    genus1, genus2 = genus(g1), genus(g2)
    if genus1 != genus2:
        raise GenusMismatch(genus1, genus2)
    first = canonicalize(g1, max_steps)
    second = canonicalize(g2, max_steps)
    c1, c2 = first.canonical_graph, second.canonical_graph
    mapping = dict(zip(c2.vertices, c1.vertices))
    middle = Relabel(dict((a, c2.label(b)) for b, a in mapping.items() if c1.label(a) != c2.label(b)))
    back = second.sequence.inverse(g2)
    taken = set(g1.vertices) | set(c1.vertices)
    for op in back:
        for vid in getattr(op, "new_ids", ()):
            if vid not in mapping:
                new = vid if vid not in taken else utils.fresh_id(vid + "_", taken)
                mapping[vid] = new
                taken.add(new)
    return first.sequence + [middle] + back.rename(mapping)
