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
程序入口，定义了校验、生成、规范化、连接、距离、持续图与稳定性实验等子命令
"""

import logging
import os
import sys
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from reebedit.edit import canonical
from reebedit.edit import deform
from reebedit.edit import distance
from reebedit.edit import experiment
from reebedit.edit import persistence
from reebedit.edit import sampler
from reebedit.edit import ArgConfig
from reebedit.edit import Environment
from reebedit.edit.data_struct import corpus
from reebedit.edit.data_struct import LabeledReebGraph
from reebedit.edit.data_struct.errors import ReebError
from reebedit.edit.data_struct.graph import check_valid
from reebedit.edit.data_struct.graph import classes
from reebedit.edit.data_struct.graph import genus
from reebedit.edit.data_struct.graph import is_canonical
from reebedit.edit.data_struct.graph import is_minimal
from reebedit.edit.data_struct.graph import leaf_counts
from reebedit.edit.data_struct.graph import validate as validate_graph
from reebedit.edit.data_struct.utils import format_label


def _emit(env, obj):
    """write JSON to --output or stdout"""
    _emit_text(env, corpus.dumps(obj, env.args.pretty) + "\n")


def _emit_text(env, text):
    if env.args.output:
        directory = os.path.dirname(env.args.output)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)
        with open(env.args.output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(path, check=True):
    graph = corpus.graph_from_json(corpus.load_json(path))
    return check_valid(graph) if check else graph


def _search_params(env, g1, g2):
    args = env.args
    epsilon = args.epsilon if args.epsilon is not None else distance.default_epsilon(
        g1, g2, args.epsilon_ratio)
    return distance.SearchParams(args.beam_width, args.max_depth, epsilon, args.seed, args.threads)


def validate(env):
    """Validate a graph file"""
    graph = _load_graph(env.args.inputs[0], check=False)
    report = validate_graph(graph)
    result = report.to_json()
    result["genus"] = genus(graph) if report.ok else None
    _emit(env, result)
    if not report.ok:
        logging.warning("invalid graph: {}".format(", ".join(report.rules())))
        return 1
    return 0


def info(env):
    """Summarize a graph"""
    graph = _load_graph(env.args.inputs[0])
    p, q = leaf_counts(graph)
    _emit(env, {
        "genus": genus(graph),
        "minima": p,
        "maxima": q,
        "vertices": graph.num_vertices,
        "classes": dict((v, cls.value) for v, cls in classes(graph).items()),
        "minimal": is_minimal(graph),
        "canonical": is_canonical(graph),
        "diagram": persistence.extended_diagram(graph).to_json(),
    })
    return 0


def gen(env):
    """Sample a random graph"""
    args = env.args
    graph = sampler.random_graph(args.genus, args.extra_leaf_pairs, args.label_low, args.label_high,
                                 relabel_steps=args.relabel_steps, rng=env.rng)
    logging.info("sampled a genus {} graph with {} vertices".format(args.genus, graph.num_vertices))
    _emit(env, corpus.graph_to_json(graph))
    return 0


def canon(env):
    """Canonicalize a graph"""
    graph = _load_graph(env.args.inputs[0])
    result = canonical.canonicalize(graph, env.args.step_budget)
    output = corpus.sequence_to_json(result.sequence, graph)
    output.update(canonical_graph=corpus.graph_to_json(result.canonical_graph),
                  rounds=result.rounds,
                  total_cost=format_label(result.sequence.total_cost(graph)))
    _emit(env, output)
    return 0


def connect(env):
    """Connect two same-genus graphs"""
    g1, g2 = [_load_graph(path) for path in env.args.inputs]
    seq = canonical.connect(g1, g2, env.args.step_budget)
    output = corpus.sequence_to_json(seq, g1)
    output["total_cost"] = format_label(seq.total_cost(g1))
    logging.info("connect: {} ops, total cost {}".format(len(seq), output["total_cost"]))
    _emit(env, output)
    return 0


def dist(env):
    """Bracket the edit distance of two graphs"""
    g1, g2 = [_load_graph(path) for path in env.args.inputs]
    params = _search_params(env, g1, g2)
    report = distance.distance_report(g1, g2, params)
    witness_ref = None
    if env.args.witness_path and report.witness is not None:
        corpus.dump_json(corpus.sequence_to_json(report.witness, g1), env.args.witness_path, env.args.pretty)
        witness_ref = env.args.witness_path
    _emit(env, report.to_json(witness_ref))
    if report.upper is None:
        sys.stderr.write("reebedit: genus mismatch {} vs {}\n".format(genus(g1), genus(g2)))
        return 1
    return 0


def pd(env):
    """Extended persistence diagram of a graph"""
    graph = _load_graph(env.args.inputs[0])
    method = persistence.reduction_diagram if env.args.method == "reduction" else persistence.extended_diagram
    _emit(env, method(graph).to_json())
    return 0


def _load_diagram(path):
    obj = corpus.load_json(path)
    if isinstance(obj, dict) and "vertices" in obj:
        return persistence.extended_diagram(check_valid(corpus.graph_from_json(obj)))
    return corpus.diagram_from_json(obj)


def bottleneck(env):
    """Bottleneck distance of two diagrams, or of the diagrams of two graphs"""
    d1, d2 = [_load_diagram(path) for path in env.args.inputs]
    _emit(env, persistence.bottleneck(d1, d2).to_json())
    return 0


def stability(env):
    """Run the stability experiment on a base graph"""
    args = env.args
    base = _load_graph(args.inputs[0])
    delta = args.delta if args.delta is not None else args.delta_ratio * base.min_gap()
    params = _search_params(env, base, base)
    rows = experiment.stability_experiment(base, delta, args.trials, args.seed, params, args.threads)
    _emit_text(env, corpus.experiment_csv(rows))
    failed = experiment.failures(rows)
    if failed:
        logging.error("{} of {} trials exceed delta".format(len(failed), len(rows)))
        return 1
    return 0


def replay(env):
    """Replay a sequence file"""
    start, ops = corpus.sequence_from_json(corpus.load_json(env.args.inputs[0]))
    check_valid(start)
    seq = deform.DeformationSequence(ops)
    graphs, costs = seq.trace(start)
    _emit(env, {
        "final_graph": corpus.graph_to_json(graphs[-1]),
        "length": len(seq),
        "total_cost": format_label(sum(costs, Fraction(0))),
    })
    return 0


COMMANDS = {
    "validate": validate,
    "info": info,
    "gen": gen,
    "canon": canon,
    "connect": connect,
    "dist": dist,
    "pd": pd,
    "bottleneck": bottleneck,
    "stability-exp": stability,
    "replay": replay,
}


def run(argv=None):
    """Run one command; returns the exit code (0 ok, 1 domain error, 2 usage error)"""
    try:
        args = ArgConfig(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    env = Environment(args)
    logging.info("Override the default configs\n{}".format(env.args))
    logging.info("Set the seed for generating random numbers to {}".format(env.args.seed))
    logging.info("Run the subcommand {}".format(env.args.command))
    try:
        return COMMANDS[env.args.command](env)
    except (ReebError, IOError, OSError) as e:
        logging.error("{} failed: {}".format(env.args.command, e))
        sys.stderr.write("reebedit: {}\n".format(e))
        return 1


def main():
    """console entry point"""
    sys.exit(run())


class ReebEdit(object):
    """
    ReebEdit

    Args:
    beam_width: INT, 束搜索宽度, 为None时使用config.ini中的值
    max_depth: INT, 束搜索最大深度
    seed: INT, 随机数种子
    threads: INT, 并行线程数
    step_budget: INT, 单次规范化允许的最大操作数
    """
    def __init__(self, beam_width=None, max_depth=None, seed=0, threads=None, step_budget=None):
        args = ["gen", "--seed={}".format(seed)]
        if beam_width:
            args.append("--beam={}".format(beam_width))
        if max_depth:
            args.append("--depth={}".format(max_depth))
        if threads:
            args.append("--threads={}".format(threads))
        if step_budget:
            args.append("--step_budget={}".format(step_budget))
        args = ArgConfig(args)
        # Don't instantiate the log handle
        args.log_path = None
        self.env = Environment(args)
        self.args = self.env.args

    @staticmethod
    def _graph(graph):
        if isinstance(graph, LabeledReebGraph):
            return check_valid(graph)
        return check_valid(corpus.graph_from_json(graph))

    def validate(self, graph):
        """
        校验图结构。

        Args:
            graph: LabeledReebGraph | dict, 图或其JSON对象

        Returns:
            report: ValidationReport

        Example:
        >>> rd = ReebEdit()
        >>> rd.validate({"vertices": [{"id": "m", "label": "0"}, {"id": "M", "label": "1"}], "edges": [["m", "M"]]}).ok
        True
        """
        if not isinstance(graph, LabeledReebGraph):
            graph = corpus.graph_from_json(graph)
        return validate_graph(graph)

    def canonicalize(self, graph):
        """规范化, 返回CanonicalizationResult"""
        return canonical.canonicalize(self._graph(graph), self.args.step_budget)

    def connect(self, g1, g2):
        """连接两个同亏格的图, 返回DeformationSequence"""
        return canonical.connect(self._graph(g1), self._graph(g2), self.args.step_budget)

    def distance(self, g1, g2):
        """
        计算编辑距离的上下界。

        Args:
            g1, g2: LabeledReebGraph | dict

        Returns:
            report: DistanceReport
        """
        g1, g2 = self._graph(g1), self._graph(g2)
        return distance.distance_report(g1, g2, _search_params(self.env, g1, g2))

    def diagram(self, graph):
        """扩展持续图"""
        return persistence.extended_diagram(self._graph(graph))

    def bottleneck(self, g1, g2):
        """两个图的持续图之间的瓶颈距离"""
        return persistence.bottleneck(self.diagram(g1), self.diagram(g2))


if __name__ == "__main__":
    main()
