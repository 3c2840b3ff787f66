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
本文件实现稳定性实验：对标号做有界扰动，检验编辑距离上界不超过扰动幅度
"""

import logging
from collections import namedtuple
from fractions import Fraction

import numpy as np
from joblib import Parallel
from joblib import delayed
from tqdm import tqdm

from reebedit.edit.data_struct import LabeledReebGraph
from reebedit.edit.data_struct.errors import PreconditionViolated
from reebedit.edit.data_struct.graph import check_valid
from reebedit.edit.data_struct.utils import format_label
from reebedit.edit.distance import SearchParams
from reebedit.edit.distance import distance_report

# perturbations are multiples of delta / PERTURB_STEPS
PERTURB_STEPS = 1000

ExperimentRow = namedtuple("ExperimentRow", ["delta", "trial", "upper", "lower"])


def perturb(graph, delta, rng):
    """every label moved independently by a multiple of delta / PERTURB_STEPS within [-delta, delta]"""
    shifts = rng.integers(-PERTURB_STEPS, PERTURB_STEPS + 1, size=graph.num_vertices)
    labels = dict((v, graph.label(v) + Fraction(int(k)) * delta / PERTURB_STEPS) for v, k in zip(graph.vertices, shifts))
    return LabeledReebGraph(labels, graph.edges())


def _trial(base, perturbed, delta, index, params):
    report = distance_report(base, perturbed, params)
    return ExperimentRow(delta, index, report.upper, report.lower)


def stability_experiment(base, delta, trials=100, seed=0, params=None, threads=1):
    """Perturb base within [-delta, delta] trials times and bound the distance of each perturbation

    Args:
        base: valid LabeledReebGraph
        delta: non-negative rational below half the smallest label gap
        trials: number of perturbations
        seed: seed of the numpy PCG64 generator
        params: SearchParams for each distance report
        threads: joblib threads running trials

    Returns:
        rows: list of ExperimentRow(delta, trial, upper, lower) in trial order
    """
    check_valid(base)
    delta = Fraction(delta)
    gap = base.min_gap()
    if delta < 0 or (gap is not None and delta >= gap / 2):
        raise PreconditionViolated(
            "delta-range", "delta {} must lie in [0, {}[ to keep the vertex order".format(
                format_label(delta), format_label(gap / 2)))
    params = params or SearchParams(beam_width=4, max_depth=1, seed=seed)
    rng = np.random.default_rng(seed)
    graphs = [perturb(base, delta, rng) for _ in range(trials)]
    logging.info("stability experiment: {} trials at delta {}".format(trials, format_label(delta)))
    rows = Parallel(n_jobs=threads, backend="threading")(
        delayed(_trial)(base, graph, delta, i, params) for i, graph in enumerate(tqdm(graphs, desc="trials")))
    passed = sum(1 for row in rows if row.upper <= delta)
    logging.info("stability experiment: {}/{} trials with upper <= delta".format(passed, trials))
    return rows


def failures(rows):
    """rows whose upper bound exceeds their delta"""
    return [row for row in rows if row.upper is None or row.upper > row.delta]
