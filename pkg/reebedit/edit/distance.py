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
本文件给出编辑距离的上下界：删除序列重写、规范化连接、束搜索以及基于持续图的下界
"""

import logging
from collections import Counter
from collections import namedtuple
from fractions import Fraction

import numpy as np
from joblib import Parallel
from joblib import delayed

from reebedit.edit import deform
from reebedit.edit.canonical import connect
from reebedit.edit.data_struct import Relabel
from reebedit.edit.data_struct import corpus
from reebedit.edit.data_struct.errors import GenusMismatch
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.graph import are_isomorphic
from reebedit.edit.data_struct.graph import edge_key
from reebedit.edit.data_struct.graph import genus
from reebedit.edit.data_struct.utils import format_label
from reebedit.edit.deform import DeformationSequence
from reebedit.edit.persistence import bottleneck
from reebedit.edit.persistence import extended_diagram

DEFAULT_EPSILON_RATIO = Fraction(1, 1000)

SearchParams = namedtuple("SearchParams", ["beam_width", "max_depth", "epsilon", "seed", "threads"])
SearchParams.__new__.__defaults__ = (32, 12, None, 0, 1)

UpperBound = namedtuple("UpperBound", ["value", "witness", "provenance"])

_State = namedtuple("_State", ["cost", "graph", "ops"])


class DistanceReport(object):
    """Certified bracket lower <= d_E <= upper with the witness realizing upper"""
    def __init__(self, lower, upper, witness, lower_provenance, upper_provenance, params=None, start=None):
        self.lower = lower
        self.upper = upper
        self.witness = witness
        self.lower_provenance = lower_provenance
        self.upper_provenance = upper_provenance
        self.params = params
        self.start = start

    @property
    def exact(self):
        """True when the bounds meet"""
        return self.upper is not None and self.lower == self.upper

    def to_json(self, witness_ref=None):
        """json style result; the witness is inlined unless a file reference is given"""
        if witness_ref is not None or self.witness is None:
            witness = witness_ref
        else:
            witness = corpus.sequence_to_json(self.witness, self.start)
        params = None
        if self.params is not None:
            params = dict(self.params._asdict())
            if params["epsilon"] is not None:
                params["epsilon"] = format_label(params["epsilon"])
        return {
            "lower": format_label(self.lower),
            "upper": None if self.upper is None else format_label(self.upper),
            "witness": witness,
            "lower_provenance": self.lower_provenance,
            "upper_provenance": self.upper_provenance,
            "params": params,
        }

    def __repr__(self):
        """repr"""
        upper = None if self.upper is None else format_label(self.upper)
        return "DistanceReport(lower={}, upper={})".format(format_label(self.lower), upper)


def default_epsilon(g1, g2, ratio=DEFAULT_EPSILON_RATIO):
    """ratio times the smallest label gap of either graph"""
    gaps = [gap for gap in (g1.min_gap(), g2.min_gap()) if gap is not None]
    return Fraction(ratio) * min(gaps) if gaps else Fraction(ratio)


def _check_genus(g1, g2):
    genus1, genus2 = genus(g1), genus(g2)
    if genus1 != genus2:
        raise GenusMismatch(genus1, genus2)
    return genus1


def relabel_witness(graph, target):
    """The order-preserving Relabel turning graph into target, if matching vertices by rank carries edges onto edges"""
    if graph.num_vertices != target.num_vertices:
        return None
    mapping = dict(zip(graph.vertices, target.vertices))
    mapped = Counter(edge_key(mapping[a], mapping[b]) for a, b in graph.edges())
    if mapped != target.edge_counts():
        return None
    return Relabel(
        dict((v, target.label(mapping[v])) for v in graph.vertices if graph.label(v) != target.label(mapping[v])))


def _maximal_intervals(intervals):
    return sorted(
        set(i for i in intervals if not any(j[0] < i[0] and i[1] < j[1] for j in intervals)))


def _deletion_intervals(graph, deaths):
    """label interval of every death; deaths never relabel, so start labels suffice"""
    intervals = []
    for op in deaths:
        intervals.append(tuple(sorted([graph.label(op.u1), graph.label(op.u2)])))
    return intervals


def epsilon_bound(graph, deaths):
    """smallest half-width among maximal deletion intervals; valid epsilons lie strictly below it"""
    maximal = _maximal_intervals(_deletion_intervals(graph, deaths))
    return min((hi - lo) / 2 for lo, hi in maximal)


def rewrite_deletions(graph, deaths, epsilon):
    """Rewrite a run of Death ops as one Relabel followed by the same deaths.

    Every maximal deletion interval [lo, hi] is contracted affinely onto [mid - epsilon, mid + epsilon],
    so the run costs at most max_k c(T_k) + (n - 1) * epsilon and at least max_k c(T_k) - epsilon.

    Args:
        graph: LabeledReebGraph the run starts from
        deaths: list of Death ops, valid in order from graph
        epsilon: positive Fraction below every maximal half-width

    Returns:
        seq: DeformationSequence [Relabel, Death, ...]
    """
    deaths = list(deaths)
    if not deaths or any(op.kind != "D" for op in deaths):
        raise PreconditionViolated("not-all-deaths", "rewrite needs a non-empty run of Death ops")
    DeformationSequence(deaths).trace(graph)
    epsilon = Fraction(epsilon)
    if not 0 < epsilon < epsilon_bound(graph, deaths):
        raise PreconditionViolated("epsilon-range", "epsilon {} outside ]0, {}[".format(
            format_label(epsilon), format_label(epsilon_bound(graph, deaths))))
    if len(deaths) == 1:
        return DeformationSequence([Relabel.identity()] + deaths)
    targets = {}
    for lo, hi in _maximal_intervals(_deletion_intervals(graph, deaths)):
        mid = (lo + hi) / 2
        scale = 2 * epsilon / (hi - lo)
        for v in graph.labels_between(lo, hi) + [graph.vertex_at(lo), graph.vertex_at(hi)]:
            targets[v] = mid - epsilon + (graph.label(v) - lo) * scale
    return DeformationSequence([Relabel(targets)] + deaths)


def _compress_runs(seq, start, epsilon):
    """Replace every run of two or more Deaths (or Births) by its rewritten form when that is cheaper"""
    graphs, costs = seq.trace(start)
    ops = list(seq)
    out = []
    i = 0
    while i < len(ops):
        kind = ops[i].kind
        j = i + 1
        while kind in ("B", "D") and j < len(ops) and ops[j].kind == kind:
            j += 1
        run = ops[i:j]
        if len(run) < 2:
            out.extend(run)
            i = j
            continue
        if kind == "D":
            base, deaths = graphs[i], run
        else:
            base = graphs[j]
            deaths = list(DeformationSequence(run).inverse(graphs[i]))
        eps = min(Fraction(epsilon), epsilon_bound(base, deaths) / 2)
        rewritten = rewrite_deletions(base, deaths, eps)
        if kind == "B":
            rewritten = rewritten.inverse(base)
        if rewritten.total_cost(graphs[i]) < sum(costs[i:j]):
            out.extend(rewritten)
        else:
            out.extend(run)
        i = j
    return DeformationSequence(out)


def upper_bound_canonical(g1, g2, epsilon=None):
    """Cheapest of the identity, direct relabel and compressed canonical-pipeline witnesses

    Returns:
        bound: UpperBound(value, witness, provenance)
    """
    _check_genus(g1, g2)
    epsilon = default_epsilon(g1, g2) if epsilon is None else Fraction(epsilon)
    candidates = []
    if are_isomorphic(g1, g2) is not None:
        candidates.append(UpperBound(Fraction(0), DeformationSequence([Relabel.identity()]), "isomorphic: identity relabel"))
    direct = relabel_witness(g1, g2)
    if direct is not None:
        candidates.append(UpperBound(deform.cost(direct, g1), DeformationSequence([direct]), "single order-preserving relabel"))
    pipeline = _compress_runs(connect(g1, g2), g1, epsilon)
    candidates.append(
        UpperBound(pipeline.total_cost(g1), pipeline,
                   "canonical pipeline, {} ops, deletion runs rewritten with epsilon {}".format(
                       len(pipeline), format_label(epsilon))))
    return min(candidates, key=lambda c: c.value)


def _finish(state, target):
    """cheapest completion of state by at most one relabel"""
    move = relabel_witness(state.graph, target)
    if move is None:
        return None
    value = state.cost + deform.cost(move, state.graph)
    ops = state.ops + ((move, ) if move.new_labels else ())
    return UpperBound(value, DeformationSequence(ops or [Relabel.identity()]), None)


def _expand(graph, epsilon):
    return deform.enumerate_moves(graph, epsilon=epsilon)


def beam_search_upper(g1, g2, params=SearchParams(), incumbent=None):
    """Best-first beam search over enumerated ops, pruned by the bottleneck lower bound

    Never returns more than the incumbent, which defaults to upper_bound_canonical.
    """
    _check_genus(g1, g2)
    epsilon = default_epsilon(g1, g2) if params.epsilon is None else Fraction(params.epsilon)
    best = incumbent if incumbent is not None else upper_bound_canonical(g1, g2, epsilon)
    target = extended_diagram(g2)
    rng = np.random.default_rng(params.seed)
    frontier = [_State(Fraction(0), g1, ())]
    seen = {g1.key(): Fraction(0)}
    found = _finish(frontier[0], g2)
    if found is not None and found.value < best.value:
        best = found._replace(provenance="direct relabel")
    for depth in range(params.max_depth):
        expansions = Parallel(n_jobs=params.threads, backend="threading")(
            delayed(_expand)(state.graph, epsilon) for state in frontier)
        scored = []
        for state, moves in zip(frontier, expansions):
            for op, result, step in moves:
                total = state.cost + step
                if total >= best.value:
                    continue
                key = result.key()
                if key in seen and seen[key] <= total:
                    continue
                seen[key] = total
                child = _State(total, result, state.ops + (op, ))
                found = _finish(child, g2)
                if found is not None and found.value < best.value:
                    best = found._replace(provenance="beam search at depth {}".format(depth + 1))
                score = total + bottleneck(extended_diagram(result), target).value
                if score < best.value:
                    scored.append((score, child))
        if not scored:
            break
        ties = rng.random(len(scored))
        ranked = sorted(range(len(scored)), key=lambda k: (scored[k][0], ties[k]))
        frontier = [scored[k][1] for k in ranked[:params.beam_width]]
        logging.info("beam depth {}: {} candidates, incumbent {}".format(depth + 1, len(scored), format_label(best.value)))
    return best


def distance_report(g1, g2, params=SearchParams()):
    """Lower bound from diagrams, upper bound from the best witness found

    On genus mismatch only the finite diagram types bound the distance and upper is None.
    """
    value = bottleneck(extended_diagram(g1), extended_diagram(g2))
    genus1, genus2 = genus(g1), genus(g2)
    if genus1 != genus2:
        logging.warning("genus mismatch {} vs {}: reporting the lower bound only".format(genus1, genus2))
        return DistanceReport(value.value, None, None,
                              "bottleneck over finite diagram types; cycle classes unmatched (genus {} vs {})".format(
                                  genus1, genus2), "none: genus mismatch {} vs {}".format(genus1, genus2), params, g1)
    epsilon = default_epsilon(g1, g2) if params.epsilon is None else Fraction(params.epsilon)
    best = upper_bound_canonical(g1, g2, epsilon)
    best = beam_search_upper(g1, g2, params, incumbent=best)
    assert value.value <= best.value, "lower bound exceeds upper bound"
    assert are_isomorphic(best.witness.replay(g1), g2) is not None
    per_type = ", ".join("{}={}".format(k, format_label(v)) for k, v in sorted(value.per_type.items()))
    lower_provenance = "bottleneck distance of extended diagrams ({})".format(per_type)
    upper_provenance = best.provenance
    if value.value == best.value:
        upper_provenance += "; meets the lower bound"
    return DistanceReport(value.value, best.value, best.witness, lower_provenance, upper_provenance, params, g1)
