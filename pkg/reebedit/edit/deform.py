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
本文件实现基本形变的前置条件检查、应用、代价、逆操作以及可用操作的枚举
"""

import itertools
import logging
from collections import Counter
from collections import namedtuple
from fractions import Fraction

from reebedit.edit.data_struct import Birth
from reebedit.edit.data_struct import Death
from reebedit.edit.data_struct import K1
from reebedit.edit.data_struct import K2
from reebedit.edit.data_struct import K3
from reebedit.edit.data_struct import Relabel
from reebedit.edit.data_struct import utils
from reebedit.edit.data_struct.errors import InconsistentPair
from reebedit.edit.data_struct.errors import LabelCollision
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.errors import ReebError
from reebedit.edit.data_struct.errors import SequenceError
from reebedit.edit.data_struct.errors import UnknownVertex
from reebedit.edit.data_struct.graph import check_valid
from reebedit.edit.data_struct.graph import validate
from reebedit.edit.data_struct.ops import ALL_KINDS
from reebedit.edit.data_struct.ops import DOWN
from reebedit.edit.data_struct.ops import UP
from reebedit.edit.data_struct.ops import pair

_Plan = namedtuple("_Plan", ["remove_vertices", "add_vertices", "remove_edges", "add_edges", "relabel", "cost", "roles"])
_Plan.__new__.__defaults__ = ((), None, (), (), None, Fraction(0), None)


def _require(graph, *vertices):
    for v in vertices:
        if v not in graph:
            raise UnknownVertex(v)


def _check_new_labels(graph, labels, freed=()):
    """new labels must be distinct and unused by every vertex outside freed"""
    if len(set(labels)) != len(labels):
        raise LabelCollision(labels[0], ())
    for label in labels:
        owner = graph.vertex_at(label)
        if owner is not None and owner not in freed:
            raise LabelCollision(label, (owner, ))


def _other_slots(graph, u, partner):
    """neighbor slots of u after dropping one slot of partner"""
    slots = graph.neighbors(u)
    if len(slots) != 3 or partner not in slots:
        raise PreconditionViolated("k-shape", "{} must be a saddle adjacent to {}".format(u, partner))
    slots.remove(partner)
    if partner in slots or u in slots:
        raise PreconditionViolated("k-shape", "{} and {} are joined by a multiple edge".format(u, partner))
    return slots


def _pick(candidates, requested, role):
    """resolve an optional role from its consistent candidates"""
    if requested is not None:
        if requested not in candidates:
            raise PreconditionViolated("k-role", "{} cannot play {}; candidates {}".format(requested, role, sorted(set(candidates))))
        return requested
    if len(set(candidates)) > 1:
        raise PreconditionViolated("ambiguous-assignment", "{} must be one of {}".format(role, sorted(set(candidates))))
    return candidates[0]


def _plan_birth(graph, op):
    v1, v2 = op.edge
    _require(graph, v1, v2)
    if graph.multiplicity(v1, v2) == 0:
        raise PreconditionViolated("birth-edge", "no edge {}-{}".format(v1, v2))
    if graph.label(v1) > graph.label(v2):
        v1, v2 = v2, v1
    u1, u2 = op.new_ids
    for u in (u1, u2):
        if not isinstance(u, str) or not u or u in graph:
            raise PreconditionViolated("birth-ids", "new id {!r} is empty or already used".format(u))
    if u1 == u2 or op.attach not in (u1, u2):
        raise PreconditionViolated("birth-ids", "attach must name one of two distinct new ids")
    la, lb = pair(op.new_labels)
    _check_new_labels(graph, [la, lb])
    if not graph.label(v1) < min(la, lb) or not max(la, lb) < graph.label(v2):
        raise PreconditionViolated("birth-window", "new labels must lie inside the edge {}-{}".format(v1, v2))
    if not graph.gap_empty(la, lb):
        raise PreconditionViolated("birth-gap", "a label lies between the new labels")
    saddle = op.saddle
    return _Plan(add_vertices={u1: la, u2: lb},
                 remove_edges=[(v1, v2)],
                 add_edges=[(v1, saddle), (saddle, op.attach), (saddle, v2)],
                 cost=abs(la - lb) / 2)


def _plan_death(graph, op):
    u1, u2 = op.u1, op.u2
    _require(graph, u1, u2)
    if graph.degree(u1) != 3 or graph.degree(u2) != 1 or graph.multiplicity(u1, u2) != 1:
        raise PreconditionViolated("death-shape", "{} must be a saddle carrying the leaf {}".format(u1, u2))
    slots = graph.neighbors(u1)
    slots.remove(u2)
    v1, v2 = slots
    low, high = sorted([graph.label(u1), graph.label(u2)])
    if not graph.label(v1) < low or not high < graph.label(v2):
        raise PreconditionViolated("death-window", "{} and {} must lie between {} and {}".format(u1, u2, v1, v2))
    if not graph.gap_empty(low, high):
        raise PreconditionViolated("death-gap", "a label lies between {} and {}".format(u1, u2))
    return _Plan(remove_vertices=(u1, u2),
                 remove_edges=[(v1, u1), (u1, u2), (u1, v2)],
                 add_edges=[(v1, v2)],
                 cost=(high - low) / 2,
                 roles={"edge": (v1, v2)})


def _plan_relabel(graph, op):
    _require(graph, *op.new_labels)
    labels = graph.labels
    changed = {}
    for v, label in op.new_labels.items():
        label = Fraction(label)
        if label != labels[v]:
            changed[v] = label
    labels.update(changed)
    owners = Counter(labels.values())
    for v in sorted(changed):
        if owners[changed[v]] > 1:
            raise LabelCollision(changed[v], [w for w in labels if labels[w] == changed[v]])
    old_order = graph.vertices
    new_order = sorted(labels, key=labels.get)
    diffs = [i for i, (a, b) in enumerate(zip(old_order, new_order)) if a != b]
    if diffs:
        i = diffs[0]
        x, y = old_order[i], old_order[i + 1] if i + 1 < len(old_order) else None
        if diffs != [i, i + 1] or new_order[i] != y or new_order[i + 1] != x:
            raise PreconditionViolated("relabel-order", "the new labels change the vertex order beyond one swap")
        if graph.multiplicity(x, y):
            raise PreconditionViolated("relabel-adjacent-swap", "swapped vertices {} and {} are adjacent".format(x, y))
    cost = max([abs(label - graph.label(v)) for v, label in changed.items()] or [Fraction(0)])
    return _Plan(relabel=changed, cost=cost)


def _plan_k1(graph, op):
    u1, u2 = op.u1, op.u2
    _require(graph, u1, u2)
    if op.orientation not in (UP, DOWN):
        raise PreconditionViolated("k1-orientation", "orientation must be up or down")
    sign = 1 if op.orientation == UP else -1
    key = lambda v: sign * graph.label(v)
    if not key(u1) < key(u2):
        raise PreconditionViolated("k1-order", "u1 must come before u2 in the {} orientation".format(op.orientation))
    if not graph.gap_empty(graph.label(u1), graph.label(u2)):
        raise PreconditionViolated("k-gap", "a label lies between {} and {}".format(u1, u2))
    outer = _other_slots(graph, u1, u2)
    inner = _other_slots(graph, u2, u1)
    before = [w for w in outer if key(w) < key(u1)]
    beyond = [w for w in outer if key(w) > key(u2)]
    if len(before) != 1 or len(beyond) != 1 or any(key(w) < key(u2) for w in inner):
        raise PreconditionViolated("k1-shape", "{} and {} are not two saddles of the same kind".format(u1, u2))
    v1, v4 = before[0], beyond[0]
    v2 = _pick(inner, op.moved, "moved")
    n1, n2 = pair(op.new_labels)
    _check_new_labels(graph, [n1, n2], freed=(u1, u2))
    if not key(v1) < sign * n2 < sign * n1 < min(key(w) for w in inner + [v4]):
        raise PreconditionViolated("k1-window", "new labels must swap {} and {} inside their window".format(u1, u2))
    if not graph.gap_empty(n1, n2, ignore=(u1, u2)):
        raise PreconditionViolated("k-gap", "a label lies between the new labels")
    return _Plan(remove_edges=[(v1, u1), (u2, v2)],
                 add_edges=[(v1, u2), (u1, v2)],
                 relabel={u1: n1, u2: n2},
                 cost=max(abs(n1 - graph.label(u1)), abs(n2 - graph.label(u2))),
                 roles={"moved": v2})


def _plan_k2(graph, op):
    u1, u2 = op.u1, op.u2
    _require(graph, u1, u2)
    l1, l2 = graph.label(u1), graph.label(u2)
    if not l1 < l2:
        raise PreconditionViolated("k2-order", "{} must lie below {}".format(u1, u2))
    if not graph.gap_empty(l1, l2):
        raise PreconditionViolated("k-gap", "a label lies between {} and {}".format(u1, u2))
    low = _other_slots(graph, u1, u2)
    high = _other_slots(graph, u2, u1)
    if any(graph.label(w) > l1 for w in low) or any(graph.label(w) < l2 for w in high):
        raise PreconditionViolated("k2-shape", "{} must be joining and {} splitting".format(u1, u2))
    v1 = _pick(low, op.moved_low, "moved_low")
    v3 = _pick(high, op.moved_high, "moved_high")
    n1, n2 = pair(op.new_labels)
    _check_new_labels(graph, [n1, n2], freed=(u1, u2))
    if not max(graph.label(w) for w in low) < n2 < n1 < min(graph.label(w) for w in high):
        raise PreconditionViolated("k2-window", "new labels must put {} above {} inside their window".format(u1, u2))
    if not graph.gap_empty(n1, n2, ignore=(u1, u2)):
        raise PreconditionViolated("k-gap", "a label lies between the new labels")
    return _Plan(remove_edges=[(v1, u1), (u2, v3)],
                 add_edges=[(v1, u2), (u1, v3)],
                 relabel={u1: n1, u2: n2},
                 cost=max(abs(n1 - l1), abs(n2 - l2)),
                 roles={"moved_low": v1, "moved_high": v3})


def _plan_k3(graph, op):
    u1, u2 = op.u1, op.u2
    _require(graph, u1, u2)
    l1, l2 = graph.label(u1), graph.label(u2)
    if not l2 < l1:
        raise PreconditionViolated("k3-order", "{} must lie below {}".format(u2, u1))
    if not graph.gap_empty(l1, l2):
        raise PreconditionViolated("k-gap", "a label lies between {} and {}".format(u1, u2))
    lower = _other_slots(graph, u2, u1)
    upper = _other_slots(graph, u1, u2)
    shape = []
    for slots in (lower, upper):
        below = [w for w in slots if graph.label(w) < l2]
        above = [w for w in slots if graph.label(w) > l1]
        if len(below) != 1 or len(above) != 1:
            raise PreconditionViolated("k3-shape", "{} must be splitting and {} joining".format(u2, u1))
        shape.append((below[0], above[0]))
    (v1, v4), (v2, v3) = shape
    n1, n2 = pair(op.new_labels)
    _check_new_labels(graph, [n1, n2], freed=(u1, u2))
    if not max(graph.label(v1), graph.label(v2)) < n1 < n2 < min(graph.label(v3), graph.label(v4)):
        raise PreconditionViolated("k3-window", "new labels must put {} below {} inside their window".format(u1, u2))
    if not graph.gap_empty(n1, n2, ignore=(u1, u2)):
        raise PreconditionViolated("k-gap", "a label lies between the new labels")
    return _Plan(remove_edges=[(v1, u2), (u1, v3)],
                 add_edges=[(v1, u1), (u2, v3)],
                 relabel={u1: n1, u2: n2},
                 cost=max(abs(n1 - l1), abs(n2 - l2)),
                 roles={"lower": v1, "upper": v3})


_PLANNERS = {
    "B": _plan_birth,
    "D": _plan_death,
    "R": _plan_relabel,
    "K1": _plan_k1,
    "K2": _plan_k2,
    "K3": _plan_k3,
}


def plan(graph, op):
    """Check op against graph and return the rewrite it performs"""
    try:
        planner = _PLANNERS[op.kind]
    except (AttributeError, KeyError):
        raise PreconditionViolated("op-type", "not an edit op: {!r}".format(op))
    check_valid(graph)
    return planner(graph, op)


def apply(graph, op):
    """Apply an elementary deformation

    Args:
        graph: LabeledReebGraph
        op: Birth, Death, Relabel, K1, K2 or K3

    Returns:
        graph: the transformed LabeledReebGraph
    """
    rewrite = plan(graph, op)
    result = graph.rewrite(remove_vertices=rewrite.remove_vertices,
                           add_vertices=rewrite.add_vertices,
                           remove_edges=rewrite.remove_edges,
                           add_edges=rewrite.add_edges,
                           relabel=rewrite.relabel)
    report = validate(result)
    if not report.ok:
        raise PreconditionViolated("result-invalid", "; ".join(v.message for v in report.violations))
    return result


def cost(op, graph):
    """exact cost of op applied to graph"""
    return plan(graph, op).cost


def inverse(op, before, after):
    """Returns the op that undoes op, given the graphs around it"""
    rewrite = plan(before, op)
    if apply(before, op) != after:
        raise InconsistentPair("graph after {} does not match the op".format(op.kind))
    if op.kind == "B":
        return Death(op.saddle, op.attach)
    if op.kind == "D":
        return Birth(rewrite.roles["edge"], (op.u1, op.u2), (before.label(op.u1), before.label(op.u2)), op.u2)
    if op.kind == "R":
        return Relabel(dict((v, before.label(v)) for v in rewrite.relabel))
    if op.kind == "K1":
        return K1(op.u2, op.u1, (before.label(op.u2), before.label(op.u1)), op.orientation, rewrite.roles["moved"])
    if op.kind == "K2":
        return K3(op.u1, op.u2, (before.label(op.u1), before.label(op.u2)))
    return K2(op.u1, op.u2, (before.label(op.u1), before.label(op.u2)), rewrite.roles["lower"], rewrite.roles["upper"])


class DeformationSequence(object):
    """Ordered list of edit ops, replayed from a start graph"""
    def __init__(self, ops=()):
        self.ops = list(ops)

    def __len__(self):
        return len(self.ops)

    def __iter__(self):
        return iter(self.ops)

    def __getitem__(self, index):
        return self.ops[index]

    def __add__(self, other):
        return DeformationSequence(self.ops + list(other))

    def __eq__(self, other):
        return isinstance(other, DeformationSequence) and self.ops == other.ops

    def __repr__(self):
        """repr"""
        return "DeformationSequence([{}])".format(", ".join(op.kind for op in self.ops))

    def append(self, op):
        """append"""
        self.ops.append(op)

    def extend(self, ops):
        """extend"""
        self.ops.extend(ops)

    def kinds(self):
        """op kinds in order"""
        return [op.kind for op in self.ops]

    def trace(self, start):
        """Replays the sequence, returning every intermediate graph and the per-op costs"""
        graphs, costs = [start], []
        for index, op in enumerate(self.ops):
            try:
                costs.append(cost(op, graphs[-1]))
                graphs.append(apply(graphs[-1], op))
            except ReebError as e:
                raise SequenceError(index, e)
        return graphs, costs

    def replay(self, start):
        """final graph"""
        return self.trace(start)[0][-1]

    def total_cost(self, start):
        """sum of op costs"""
        return sum(self.trace(start)[1], Fraction(0))

    def inverse(self, start):
        """the sequence that leads from replay(start) back to start"""
        graphs, _ = self.trace(start)
        ops = [inverse(op, graphs[i], graphs[i + 1]) for i, op in enumerate(self.ops)]
        return DeformationSequence(reversed(ops))

    def rename(self, mapping):
        """rename vertex ids in every op"""
        return DeformationSequence(op.rename(mapping) for op in self.ops)


def replay(seq, start):
    """final graph of seq replayed from start"""
    return DeformationSequence(seq).replay(start)


def total_cost(seq, start):
    """total cost of seq replayed from start"""
    return DeformationSequence(seq).total_cost(start)


def _attempt(graph, op):
    try:
        return op, apply(graph, op), cost(op, graph)
    except ReebError:
        return None


def _relabel_candidates(graph, epsilon):
    yield Relabel.identity()
    if epsilon <= 0:
        return
    order = graph.vertices
    for v in order:
        for delta in (epsilon, -epsilon):
            target = graph.label(v) + delta
            if graph.gap_empty(graph.label(v), target) and graph.vertex_at(target) is None:
                yield Relabel({v: target})
    for x, y in zip(order, order[1:]):
        if graph.multiplicity(x, y):
            continue
        nxt, prv = graph.successor(y), graph.predecessor(x)
        up = graph.label(y) + epsilon
        if nxt is not None and up >= graph.label(nxt):
            up = utils.midpoint(graph.label(y), graph.label(nxt))
        down = graph.label(x) - epsilon
        if prv is not None and down <= graph.label(prv):
            down = utils.midpoint(graph.label(x), graph.label(prv))
        yield Relabel({x: up})
        yield Relabel({y: down})


def _k_candidates(graph, epsilon):
    order = graph.vertices
    half = Fraction(epsilon) / 2
    for x, y in zip(order, order[1:]):
        if not graph.multiplicity(x, y) or graph.degree(x) != 3 or graph.degree(y) != 3:
            continue
        lx, ly = graph.label(x), graph.label(y)
        mid = utils.midpoint(lx, ly)
        # (label for the vertex that moves up, label for the one that moves down)
        placements = [(ly, lx)]
        if half > 0:
            placements.append((mid + half, mid - half))
        x_slots = sorted(set(graph.neighbors(x)) - set([y]))
        y_slots = sorted(set(graph.neighbors(y)) - set([x]))
        for up, down in placements:
            for moved in y_slots:
                yield K1(x, y, (up, down), UP, moved)
            for moved in x_slots:
                yield K1(y, x, (down, up), DOWN, moved)
            for low, high in itertools.product(x_slots, y_slots):
                yield K2(x, y, (up, down), low, high)
            yield K3(y, x, (down, up))


def _birth_candidates(graph, epsilon):
    if epsilon <= 0:
        return
    taken = set(graph.vertices)
    saddle = utils.fresh_id("b", taken)
    leaf = utils.fresh_id("b", taken | set([saddle]))
    for a, b in sorted(graph.edge_counts()):
        low, high = sorted([graph.label(a), graph.label(b)])
        marks = [low] + [graph.label(v) for v in graph.labels_between(low, high)] + [high]
        width, start = max((marks[i + 1] - marks[i], -i) for i in range(len(marks) - 1))
        mid = utils.midpoint(marks[-start], marks[-start + 1])
        half = min(Fraction(epsilon) / 2, width / 4)
        for leaf_label, saddle_label in ((mid - half, mid + half), (mid + half, mid - half)):
            yield Birth((a, b), (saddle, leaf), (saddle_label, leaf_label), leaf)


def enumerate_moves(graph, kinds=None, epsilon=0):
    """Applicable ops with their results and costs

    Args:
        graph: valid LabeledReebGraph
        kinds: iterable of op kinds to keep, all six by default
        epsilon: how far Relabel, K and Birth templates may place labels

    Returns:
        moves: list of (op, result, cost)
    """
    kinds = set(ALL_KINDS if kinds is None else kinds)
    epsilon = Fraction(epsilon)
    check_valid(graph)
    candidates = []
    if "D" in kinds:
        for leaf in graph.leaves():
            candidates.append(Death(graph.neighbors(leaf)[0], leaf))
    if kinds & set(["K1", "K2", "K3"]):
        candidates.extend(op for op in _k_candidates(graph, epsilon) if op.kind in kinds)
    if "R" in kinds:
        candidates.extend(_relabel_candidates(graph, epsilon))
    if "B" in kinds:
        candidates.extend(_birth_candidates(graph, epsilon))
    moves = [move for move in (_attempt(graph, op) for op in candidates) if move is not None]
    logging.debug("{} of {} candidate ops apply".format(len(moves), len(candidates)))
    return moves


def enumerate_applicable(graph, kinds=None, epsilon=0):
    """list of applicable op templates"""
    return [op for op, _, _ in enumerate_moves(graph, kinds, epsilon)]
