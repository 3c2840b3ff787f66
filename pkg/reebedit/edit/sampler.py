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
本文件实现随机合法Reeb图的生成：规范骨架、随机出生操作以及有界的重标号游走
"""

import logging
from fractions import Fraction

import numpy as np

from reebedit.edit import deform
from reebedit.edit.data_struct import Birth
from reebedit.edit.data_struct import LabeledReebGraph
from reebedit.edit.data_struct import utils
from reebedit.edit.data_struct.errors import ReebError

# labels are drawn from a grid of this many steps over [label_low, label_high]
GRID = 10**6
WALK_KINDS = ("R", "K1", "K2", "K3")


def canonical_graph(labels):
    """Canonical chain on the given increasing labels: m, then double-edged saddle pairs, then M.

    Args:
        labels: 2g + 2 distinct labels

    Returns:
        graph: canonical LabeledReebGraph of genus g with ids m, s1 .. s2g, M
    """
    labels = sorted(Fraction(x) for x in labels)
    if len(labels) < 2 or len(labels) % 2:
        raise ValueError("a canonical graph needs an even number of labels, at least two")
    ids = ["m"] + ["s{}".format(i) for i in range(1, len(labels) - 1)] + ["M"]
    edges = []
    for i in range(len(ids) - 1):
        edges.append((ids[i], ids[i + 1]))
        if 1 <= i < len(ids) - 2 and i % 2 == 1:
            edges.append((ids[i], ids[i + 1]))
    return LabeledReebGraph(dict(zip(ids, labels)), edges)


def _draw_labels(rng, count, low, high):
    steps = rng.choice(GRID + 1, size=count, replace=False)
    return sorted(low + (high - low) * Fraction(int(x), GRID) for x in steps)


def _random_birth(rng, graph):
    """a Birth on a random edge, both new labels inside one free gap of that edge"""
    edges = sorted(graph.edge_counts())
    a, b = edges[rng.integers(len(edges))]
    low, high = sorted([graph.label(a), graph.label(b)])
    marks = [low] + [graph.label(v) for v in graph.labels_between(low, high)] + [high]
    k = int(rng.integers(len(marks) - 1))
    lo, hi = marks[k], marks[k + 1]
    first, second = sorted(rng.choice(np.arange(1, 1000), size=2, replace=False))
    inner = [lo + (hi - lo) * Fraction(int(first), 1000), lo + (hi - lo) * Fraction(int(second), 1000)]
    if rng.random() < 0.5:
        inner.reverse()
    leaf_label, saddle_label = inner
    taken = set(graph.vertices)
    saddle = utils.fresh_id("s", taken)
    leaf = utils.fresh_id("x", taken | set([saddle]))
    return Birth((a, b), (saddle, leaf), (saddle_label, leaf_label), leaf)


def _within(graph, low, high):
    labels = [graph.label(v) for v in graph.vertices]
    return low <= labels[0] and labels[-1] <= high


def random_graph(genus, extra_leaf_pairs=0, label_low=0, label_high=100, seed=0, relabel_steps=8, rng=None):
    """Sample a valid labeled Reeb graph

    Starts from a canonical skeleton of the requested genus with random distinct labels, applies
    extra_leaf_pairs random Births, then walks relabel_steps random R and K moves. Every label
    stays within [label_low, label_high].

    Args:
        genus: int >= 0
        extra_leaf_pairs: number of Births, each adding a saddle and a leaf
        label_low, label_high: label range
        seed: seed of the numpy PCG64 generator, ignored when rng is given
        relabel_steps: length of the R/K walk
        rng: optional numpy Generator to draw from

    Returns:
        graph: LabeledReebGraph
    """
    label_low, label_high = Fraction(label_low), Fraction(label_high)
    if genus < 0 or extra_leaf_pairs < 0 or relabel_steps < 0:
        raise ValueError("genus, extra_leaf_pairs and relabel_steps must be non-negative")
    if not label_low < label_high:
        raise ValueError("label_low must be below label_high")
    rng = np.random.default_rng(seed) if rng is None else rng
    graph = canonical_graph(_draw_labels(rng, 2 * genus + 2, label_low, label_high))
    births = 0
    while births < extra_leaf_pairs:
        try:
            graph = deform.apply(graph, _random_birth(rng, graph))
        except ReebError as e:
            logging.debug("rejected random birth: {}".format(e))
            continue
        births += 1
    for _ in range(relabel_steps):
        epsilon = graph.min_gap() / 4
        moves = [(op, result) for op, result, step in deform.enumerate_moves(graph, WALK_KINDS, epsilon)
                 if step > 0 and _within(result, label_low, label_high)]
        if not moves:
            break
        graph = moves[int(rng.integers(len(moves)))][1]
    return graph
