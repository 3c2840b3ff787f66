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
扩展持续图与瓶颈距离的测试
"""

from fractions import Fraction

import numpy as np
import pytest

from reebedit.edit import canonical
from reebedit.edit.data_struct import PersistenceDiagram
from reebedit.edit.data_struct.errors import SizeCapExceeded
from reebedit.edit.experiment import perturb
from reebedit.edit.persistence import bottleneck
from reebedit.edit.persistence import bottleneck_oracle
from reebedit.edit.persistence import extended_diagram
from reebedit.edit.persistence import reduction_diagram
from reebedit.edit.sampler import random_graph
from reebedit.tests.samples import bump_torus
from reebedit.tests.samples import diamond
from reebedit.tests.samples import make_graph
from reebedit.tests.samples import min_max
from reebedit.tests.samples import seeded_graphs
from reebedit.tests.samples import three_bumps
from reebedit.tests.samples import torus
from reebedit.tests.samples import two_splits


def two_minima():
    return make_graph({"m0": 0, "m1": 1, "j": 2, "M": 3}, [("m0", "j"), ("m1", "j"), ("j", "M")])


def test_min_max_diagram():
    d = extended_diagram(min_max(0, 1))
    assert d.ess0 == (0, 1)
    assert d.ord0 == [] and d.rel_ord0_neg == [] and d.ess1 == []


def test_torus_diagram():
    d = extended_diagram(torus())
    assert d.ess0 == (0, 3)
    assert d.ess1 == [(2, 1)]
    assert d.ord0 == [] and d.rel_ord0_neg == []


def test_three_bumps_diagram():
    d = extended_diagram(three_bumps())
    assert d.rel_ord0_neg == [(3, 1), (6, 4), (9, 7)]
    assert d.ord0 == []
    assert d.ess0 == (0, 10)


def test_two_minima_diagram():
    d = extended_diagram(two_minima())
    assert d.ord0 == [(1, 2)]
    assert d.ess0 == (0, 3)


def test_diagram_json():
    assert extended_diagram(torus()).to_json() == {
        "ord0": [],
        "rel_ord0_neg": [],
        "ess0": ["0", "3"],
        "ess1": [["2", "1"]],
    }


@pytest.mark.parametrize("build", [min_max, torus, bump_torus, three_bumps, two_splits, diamond, two_minima])
def test_reduction_matches_sweep_examples(build):
    assert reduction_diagram(build()) == extended_diagram(build())


def test_reduction_matches_sweep_random():
    rng = np.random.default_rng(11)
    for i in range(120):
        g = i % 4
        graph = random_graph(g, int(rng.integers(0, 5 - g)), 0, 100, rng=rng)
        assert graph.num_vertices <= 10
        assert reduction_diagram(graph) == extended_diagram(graph)


def test_bottleneck_examples():
    a = PersistenceDiagram(ord0=[(1, 3)], ess0=(0, 5))
    b = PersistenceDiagram(ess0=(0, 5))
    assert bottleneck(a, b).value == 1
    assert bottleneck(a, a).value == 0
    shift = Fraction(1, 7)
    c = PersistenceDiagram(ess0=(0, 3), ess1=[(2, 1)])
    d = PersistenceDiagram(ess0=(0, 3), ess1=[(2 + shift, 1 + shift)])
    value = bottleneck(c, d)
    assert value.value == shift
    assert not value.infinite
    assert value.per_type["ess1"] == shift


def test_bottleneck_infinite():
    value = bottleneck(extended_diagram(torus()), extended_diagram(min_max(0, 3)))
    assert value.infinite
    assert value.per_type["ess1"] is None
    assert value.matching is None
    assert value.to_json()["value"] is None


def _random_diagram(rng):
    def points(count):
        return [(int(rng.integers(0, 7)), int(rng.integers(0, 7))) for _ in range(count)]

    return PersistenceDiagram(
        ord0=points(int(rng.integers(0, 4))),
        rel_ord0_neg=points(int(rng.integers(0, 4))),
        ess0=points(1)[0],
        ess1=points(int(rng.integers(0, 3))),
    )


def test_bottleneck_matches_oracle():
    rng = np.random.default_rng(5)
    for _ in range(500):
        d1, d2 = _random_diagram(rng), _random_diagram(rng)
        fast, slow = bottleneck(d1, d2), bottleneck_oracle(d1, d2)
        assert fast.infinite == slow.infinite
        assert fast.value == slow.value
        assert fast.per_type == slow.per_type


def test_bottleneck_metric():
    rng = np.random.default_rng(6)
    for _ in range(200):
        d1, d2, d3 = [_random_diagram(rng) for _ in range(3)]
        for d in (d2, d3):
            d.ess1 = list(d1.ess1)
        ab, ba = bottleneck(d1, d2).value, bottleneck(d2, d1).value
        assert ab == ba
        assert bottleneck(d1, d1).value == 0
        assert bottleneck(d1, d3).value <= ab + bottleneck(d2, d3).value


def test_oracle_cap():
    big = PersistenceDiagram(ord0=[(i, i + 2) for i in range(8)], ess0=(0, 10))
    with pytest.raises(SizeCapExceeded):
        bottleneck_oracle(big, PersistenceDiagram(ess0=(0, 10)))


def test_stability_under_perturbation():
    rng = np.random.default_rng(8)
    for graph in seeded_graphs(40, seed=8):
        delta = graph.min_gap() / 3
        moved = perturb(graph, delta, rng)
        value = bottleneck(extended_diagram(graph), extended_diagram(moved))
        assert not value.infinite
        assert value.value <= delta


def test_lower_bound_below_connect_cost():
    pool = seeded_graphs(42, seed=21, genera=(0, 1, 2), max_leaf_pairs=2)
    for g1, g2 in zip(pool[:21], pool[21:]):
        lower = bottleneck(extended_diagram(g1), extended_diagram(g2)).value
        assert lower <= canonical.connect(g1, g2).total_cost(g1)
