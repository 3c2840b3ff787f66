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
编辑距离上下界、删除重写与搜索的测试
"""

from fractions import Fraction

import numpy as np
import pytest

from reebedit.edit import deform
from reebedit.edit import distance
from reebedit.edit.canonical import connect
from reebedit.edit.data_struct import Death
from reebedit.edit.data_struct import K1
from reebedit.edit.data_struct import LabeledReebGraph
from reebedit.edit.data_struct.errors import GenusMismatch
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.graph import are_isomorphic
from reebedit.edit.data_struct.ops import UP
from reebedit.edit.distance import SearchParams
from reebedit.edit.distance import distance_report
from reebedit.edit.sampler import random_graph
from reebedit.tests.samples import canonical_graph
from reebedit.tests.samples import make_graph
from reebedit.tests.samples import min_max
from reebedit.tests.samples import seeded_graphs
from reebedit.tests.samples import three_bumps
from reebedit.tests.samples import torus
from reebedit.tests.samples import two_splits

SMALL = SearchParams(beam_width=4, max_depth=2)

BUMP_DEATHS = [Death("p1", "q1"), Death("p2", "q2"), Death("p3", "q3")]


def nested():
    """the branch p - q carries a smaller branch a - b, so [3, 5] lies inside [1, 9]"""
    return make_graph({"m": 0, "p": 1, "a": 3, "b": 5, "q": 9, "M": 10},
                      [("m", "p"), ("p", "M"), ("p", "a"), ("a", "q"), ("a", "b")])


def shifted(graph, delta):
    return LabeledReebGraph(dict((v, graph.label(v) + delta) for v in graph.vertices), graph.edges())


def test_naive_deaths_cost():
    assert deform.DeformationSequence(BUMP_DEATHS).total_cost(three_bumps()) == 3


def test_rewrite_three_bumps():
    seq = distance.rewrite_deletions(three_bumps(), BUMP_DEATHS, Fraction(1, 100))
    assert seq.kinds() == ["R", "D", "D", "D"]
    assert seq.total_cost(three_bumps()) == Fraction(51, 50)
    assert seq.replay(three_bumps()) == deform.DeformationSequence(BUMP_DEATHS).replay(three_bumps())


def test_rewrite_nested():
    deaths = [Death("a", "b"), Death("p", "q")]
    assert deform.DeformationSequence(deaths).total_cost(nested()) == 5
    eps = Fraction(1, 100)
    value = distance.rewrite_deletions(nested(), deaths, eps).total_cost(nested())
    assert 4 - eps <= value <= 4 + eps


def test_rewrite_single_death():
    seq = distance.rewrite_deletions(three_bumps(), BUMP_DEATHS[:1], Fraction(1, 100))
    assert seq.kinds() == ["R", "D"]
    assert seq.total_cost(three_bumps()) == 1


def test_rewrite_rejects():
    with pytest.raises(PreconditionViolated) as e:
        distance.rewrite_deletions(three_bumps(), [], Fraction(1, 100))
    assert e.value.rule == "not-all-deaths"
    with pytest.raises(PreconditionViolated) as e:
        distance.rewrite_deletions(three_bumps(), BUMP_DEATHS, 1)
    assert e.value.rule == "epsilon-range"
    with pytest.raises(PreconditionViolated):
        distance.rewrite_deletions(three_bumps(), BUMP_DEATHS, 0)


def _death_run(graph):
    deaths = []
    while True:
        options = deform.enumerate_applicable(graph, kinds=["D"])
        if not options:
            return deaths
        deaths.append(options[0])
        graph = deform.apply(graph, options[0])


def test_rewrite_bounds_random():
    rng = np.random.default_rng(17)
    checked = 0
    while checked < 100:
        graph = random_graph(int(rng.integers(0, 3)), int(rng.integers(1, 6)), 0, 100, relabel_steps=2, rng=rng)
        deaths = _death_run(graph)
        if not deaths:
            continue
        eps = distance.epsilon_bound(graph, deaths) / 2
        widest = max(deform.DeformationSequence(deaths).trace(graph)[1])
        value = distance.rewrite_deletions(graph, deaths, eps).total_cost(graph)
        assert widest - eps <= value <= widest + (len(deaths) - 1) * eps
        checked += 1


def test_default_epsilon():
    assert distance.default_epsilon(three_bumps(), min_max(0, 10)) == Fraction(1, 1000)


def test_upper_bound_three_bumps():
    bound = distance.upper_bound_canonical(three_bumps(), min_max(0, 10))
    assert bound.value == 1 + Fraction(2, 1000)
    assert are_isomorphic(bound.witness.replay(three_bumps()), min_max(0, 10)) is not None


def test_report_three_bumps():
    report = distance_report(three_bumps(), min_max(0, 10), SearchParams(beam_width=2, max_depth=1))
    assert report.lower == 1
    assert 1 <= report.upper <= 1 + Fraction(2, 1000)


def test_self_distance():
    for graph in (torus(), three_bumps(), two_splits()):
        report = distance_report(graph, graph, SMALL)
        assert report.lower == 0 and report.upper == 0
        assert report.exact


def test_uniform_shift():
    delta = Fraction(1, 10)
    report = distance_report(torus(), shifted(torus(), delta), SMALL)
    assert report.lower == delta
    assert report.upper == delta
    assert report.exact


def test_saddle_shift_exact():
    g1 = canonical_graph([0, 1, 2, 3, 4, 5])
    g2 = canonical_graph([0, Fraction(3, 2), Fraction(5, 2), Fraction(7, 2), Fraction(9, 2), 5])
    report = distance_report(g1, g2, SMALL)
    assert report.lower == report.upper == Fraction(1, 2)
    assert report.witness.kinds() == ["R"]


def test_equal_diagrams_not_isomorphic():
    labels = {"m": 0, "s": 1, "t": 2, "a": 3, "b": 4, "M": 5}
    g1 = make_graph(labels, [("m", "s"), ("s", "t"), ("s", "b"), ("t", "a"), ("t", "M")])
    g2 = make_graph(labels, [("m", "s"), ("s", "t"), ("s", "M"), ("t", "a"), ("t", "b")])
    report = distance_report(g1, g2, SMALL)
    assert report.lower == 0
    assert report.upper > 0
    assert not report.exact


def test_beam_finds_single_move():
    g1 = two_splits()
    g2 = deform.apply(g1, K1("u1", "u2", (Fraction(2), Fraction(1)), UP, "y"))
    bound = distance.beam_search_upper(g1, g2, SearchParams(beam_width=8, max_depth=1))
    assert bound.value <= 1
    assert are_isomorphic(bound.witness.replay(g1), g2) is not None


def test_beam_never_exceeds_incumbent():
    pool = seeded_graphs(20, seed=31, genera=(0, 1), max_leaf_pairs=2)
    for g1, g2 in zip(pool[:10], pool[10:]):
        incumbent = distance.upper_bound_canonical(g1, g2)
        bound = distance.beam_search_upper(g1, g2, SearchParams(beam_width=2, max_depth=1), incumbent)
        assert bound.value <= incumbent.value
        assert are_isomorphic(bound.witness.replay(g1), g2) is not None


def test_connect_cost_symmetric():
    pool = seeded_graphs(40, seed=41, genera=(0, 1, 2, 3), max_leaf_pairs=3)
    for g1, g2 in zip(pool[:20], pool[20:]):
        assert connect(g1, g2).total_cost(g1) == connect(g2, g1).total_cost(g2)


def test_canonical_bound_symmetric():
    pool = seeded_graphs(18, seed=43, genera=(0, 1, 2), max_leaf_pairs=3)
    for g1, g2 in zip(pool[:9], pool[9:]):
        forward = distance.upper_bound_canonical(g1, g2)
        backward = distance.upper_bound_canonical(g2, g1)
        assert forward.value == backward.value


def test_reports_bracket_random():
    pool = seeded_graphs(24, seed=51, genera=(0, 1, 2), max_leaf_pairs=2)
    for g1, g2 in zip(pool[:12], pool[12:]):
        report = distance_report(g1, g2, SearchParams(beam_width=2, max_depth=1))
        assert report.lower <= report.upper
        assert are_isomorphic(report.witness.replay(g1), g2) is not None


def test_genus_mismatch_report():
    report = distance_report(torus(), min_max(0, 3), SMALL)
    assert report.upper is None
    assert report.witness is None
    assert report.lower == 0
    assert report.to_json()["upper"] is None
    with pytest.raises(GenusMismatch):
        distance.upper_bound_canonical(torus(), min_max(0, 3))


def test_report_json():
    report = distance_report(torus(), shifted(torus(), Fraction(1, 4)), SMALL)
    inline = report.to_json()
    assert inline["lower"] == "0.25" and inline["upper"] == "0.25"
    assert inline["witness"]["ops"][0]["type"] == "R"
    assert inline["params"]["beam_width"] == 4
    assert report.to_json(witness_ref="witness.json")["witness"] == "witness.json"
