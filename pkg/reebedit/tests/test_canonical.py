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
路径约化、圈约化、规范化与连接的测试
"""

import numpy as np
import pytest
from hypothesis import HealthCheck
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from reebedit.edit import canonical
from reebedit.edit.data_struct.errors import GenusMismatch
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.errors import StepBudgetExceeded
from reebedit.edit.data_struct.graph import are_isomorphic
from reebedit.edit.data_struct.graph import genus
from reebedit.edit.data_struct.graph import is_canonical
from reebedit.edit.data_struct.graph import is_minimal
from reebedit.edit.data_struct.graph import leaf_counts
from reebedit.edit.data_struct.graph import validate
from reebedit.edit.sampler import random_graph
from reebedit.tests.samples import bump_torus
from reebedit.tests.samples import diamond
from reebedit.tests.samples import graphs
from reebedit.tests.samples import make_graph
from reebedit.tests.samples import min_max
from reebedit.tests.samples import seeded_graphs
from reebedit.tests.samples import three_bumps
from reebedit.tests.samples import torus


def test_reduce_path_three_bumps():
    g = three_bumps()
    seq = canonical.reduce_path(g, "q1", "q3")
    assert set(seq.kinds()) <= set(["R", "K1", "K3"])
    result = seq.replay(g)
    assert validate(result).ok
    assert result.neighbors("q1") == result.neighbors("q3")


def test_reduce_path_neighbors_already_shared():
    g = three_bumps()
    assert len(canonical.reduce_path(g, "q3", "M")) == 0


def test_reduce_path_rejects():
    with pytest.raises(PreconditionViolated) as e:
        canonical.reduce_path(three_bumps(), "m0", "M")
    assert e.value.rule == "class-mismatch"
    with pytest.raises(PreconditionViolated):
        canonical.reduce_path(three_bumps(), "q1", "q1")


def test_reduce_cycle_diamond():
    g = diamond()
    seq = canonical.reduce_cycle(g, [("a", "b"), ("b", "d"), ("d", "c"), ("c", "a")])
    assert set(seq.kinds()) <= set(["R", "K1", "K3"])
    result = seq.replay(g)
    assert validate(result).ok
    assert genus(result) == 2
    assert any(result.multiplicity("a", w) == 2 for w in result.vertices)


def test_reduce_cycle_rejects():
    with pytest.raises(PreconditionViolated) as e:
        canonical.reduce_cycle(diamond(), [("a", "b"), ("b", "d")])
    assert e.value.rule == "not-a-cycle"
    with pytest.raises(PreconditionViolated):
        canonical.reduce_cycle(diamond(), [("a", "b"), ("b", "c"), ("c", "M")])


def test_minimalize():
    result = canonical.minimalize(three_bumps())
    assert is_minimal(result.canonical_graph)
    assert result.sequence.kinds() == ["D", "D", "D"]
    assert result.sequence.replay(three_bumps()) == result.canonical_graph


def valley_walk():
    """four minima whose second walk meets a valley just below the peak"""
    labels = {
        "m": "1.3709", "s1": "55.2594", "s2": "66.1793", "x0": "67.573577066", "x2": "67.581204742875",
        "s0": "69.10004644225", "x1": "69.12865023053125", "s3": "71.6674820461494140625",
        "s6": "71.6680779584052734375", "s5": "75.7588", "s4": "92.7019", "M": "99.540904087744140625"
    }
    edges = [("M", "s4"), ("m", "s1"), ("s0", "s2"), ("s0", "s3"), ("s0", "x0"), ("s1", "s2"), ("s1", "s2"),
             ("s3", "s5"), ("s3", "s6"), ("s4", "s5"), ("s4", "s6"), ("s5", "x1"), ("s6", "x2")]
    return make_graph(labels, edges)


def test_minimalize_counts_rounds():
    assert canonical.minimalize(three_bumps()).rounds == 0
    g = valley_walk()
    assert leaf_counts(g) == (4, 1)
    result = canonical.minimalize(g)
    assert is_minimal(result.canonical_graph)
    assert 1 <= result.rounds <= 3
    assert result.sequence.replay(g) == result.canonical_graph


def test_canonicalize_valley():
    g = valley_walk()
    assert validate(g).ok
    assert genus(g) == 2
    result = canonical.canonicalize(g)
    assert is_canonical(result.canonical_graph)
    assert result.canonical_graph.num_vertices == 2 * genus(g) + 2
    assert result.sequence.replay(g) == result.canonical_graph
    seq = canonical.connect(g, diamond())
    assert are_isomorphic(seq.replay(g), diamond()) is not None


def test_canonicalize_small():
    assert len(canonical.canonicalize(torus()).sequence) == 0
    assert len(canonical.canonicalize(min_max()).sequence) == 0
    result = canonical.canonicalize(bump_torus())
    assert result.sequence.kinds() == ["D"]
    result = canonical.canonicalize(diamond())
    assert is_canonical(result.canonical_graph)
    assert result.rounds <= 2


def test_step_budget():
    with pytest.raises(StepBudgetExceeded):
        canonical.canonicalize(three_bumps(), max_steps=2)


def test_canonicalize_random():
    rng = np.random.default_rng(7)
    for i in range(200):
        g = i % 5
        graph = random_graph(g, int(rng.integers(0, 7)), 0, 100, rng=rng)
        result = canonical.canonicalize(graph)
        c = result.canonical_graph
        assert is_canonical(c)
        assert c.num_vertices == 2 * g + 2
        assert result.rounds <= g
        assert result.sequence.replay(graph) == c


def test_connect_random():
    pool = seeded_graphs(200, seed=99, genera=(0, 1, 2, 3), max_leaf_pairs=3)
    for g1, g2 in zip(pool[:100], pool[100:]):
        seq = canonical.connect(g1, g2)
        assert are_isomorphic(seq.replay(g1), g2) is not None


def test_connect_genus_mismatch():
    with pytest.raises(GenusMismatch) as e:
        canonical.connect(torus(), diamond())
    assert str(e.value) == "genus mismatch 1 vs 2"


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(graphs(max_genus=4, max_leaf_pairs=7, relabel_steps=st.integers(0, 20)),
       graphs(max_genus=4, max_leaf_pairs=7, relabel_steps=st.integers(0, 20)))
def test_canonicalize_and_connect_long_walks(graph, other):
    result = canonical.canonicalize(graph)
    assert is_canonical(result.canonical_graph)
    assert result.rounds <= genus(graph)
    assert result.sequence.replay(graph) == result.canonical_graph
    if genus(graph) == genus(other):
        seq = canonical.connect(graph, other)
        assert are_isomorphic(seq.replay(graph), other) is not None


def test_canonicalize_long_relabel_walks():
    rng = np.random.default_rng(12345)
    for _ in range(150):
        g = int(rng.integers(0, 5))
        graph = random_graph(g, int(rng.integers(0, 8)), 0, 100, relabel_steps=int(rng.integers(0, 21)), rng=rng)
        result = canonical.canonicalize(graph)
        assert is_canonical(result.canonical_graph)
        assert result.sequence.replay(graph) == result.canonical_graph


def test_connect_round_trip():
    pool = seeded_graphs(56, seed=5, max_leaf_pairs=5, relabel_steps=12)
    for g1, g2 in zip(pool[:28], pool[28:]):
        there = canonical.connect(g1, g2).replay(g1)
        assert are_isomorphic(there, g2) is not None
        back = canonical.connect(there, g1).replay(there)
        assert are_isomorphic(back, g1) is not None
