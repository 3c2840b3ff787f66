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
本文件初始化配置和环境的相关类
"""

import ast
import argparse
import configparser
import logging
import os
from fractions import Fraction

import numpy as np

from reebedit.edit.data_struct import utils

# command -> number of positional input files
COMMANDS = {
    "validate": 1,
    "info": 1,
    "gen": 0,
    "canon": 1,
    "connect": 2,
    "dist": 2,
    "pd": 1,
    "bottleneck": 2,
    "stability-exp": 1,
    "replay": 1,
}

DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config.ini")


class ArgumentGroup(object):
    """ArgumentGroup"""
    def __init__(self, parser, title, des):
        self._group = parser.add_argument_group(title=title, description=des)

    def add_arg(self, *args, **kwargs):
        self._group.add_argument(*args, **kwargs)


def _fraction(text):
    """argparse type for exact labels and ratios"""
    try:
        return utils.parse_label(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


class ArgConfig(configparser.ConfigParser):
    """ArgConfig class for reciving parameters"""
    def __init__(self, args=None):
        super(ArgConfig, self).__init__()

        parser = argparse.ArgumentParser(prog="reebedit", description="Edit calculus on labeled Reeb graphs.")
        parser.add_argument("command", choices=sorted(COMMANDS), help="sub-command to run")
        parser.add_argument("inputs", nargs="*", help="graph, sequence or diagram files")

        run_g = ArgumentGroup(parser, "run", "config, output and run options.")
        run_g.add_arg("--config_path", "-c", default=DEFAULT_CONFIG, help="path to config file")
        run_g.add_arg("--output", "-o", help="write the main result here instead of stdout")
        run_g.add_arg("--pretty", action="store_true", help="indent JSON output")
        run_g.add_arg("--seed", "-s", default=0, type=int, help="seed of the numpy PCG64 generator")
        run_g.add_arg("--threads", "-t", type=int, help="joblib threads")
        run_g.add_arg("--step_budget", type=int, help="max ops of one canonicalization")

        search_g = ArgumentGroup(parser, "search", "distance search options.")
        search_g.add_arg("--beam", dest="beam_width", type=int, help="beam width")
        search_g.add_arg("--depth", dest="max_depth", type=int, help="max search depth")
        search_g.add_arg("--epsilon", type=_fraction, help="absolute label step; defaults to epsilon_ratio * min gap")
        search_g.add_arg("--witness_path", help="write the witness sequence here and reference it from the report")

        gen_g = ArgumentGroup(parser, "gen", "random graph options.")
        gen_g.add_arg("--genus", "-g", default=0, type=int, help="genus of the sampled graph")
        gen_g.add_arg("--extra_leaf_pairs", "-k", default=0, type=int, help="number of random births")
        gen_g.add_arg("--label_low", type=_fraction, help="lowest label")
        gen_g.add_arg("--label_high", type=_fraction, help="highest label")
        gen_g.add_arg("--relabel_steps", type=int, help="length of the random R/K walk")

        exp_g = ArgumentGroup(parser, "experiment", "stability experiment and diagram options.")
        exp_g.add_arg("--delta", type=_fraction, help="perturbation bound; defaults to delta_ratio * min gap")
        exp_g.add_arg("--trials", type=int, help="number of perturbations")
        exp_g.add_arg("--method", default="sweep", choices=["sweep", "reduction"], help="diagram algorithm")

        log_g = ArgumentGroup(parser, "logging", "logging related")
        log_g.add_arg("--log_path", default="", help="log path, empty disables file logging")
        log_g.add_arg(
            "--log_level",
            default="INFO",
            choices=["DEBUG", "INFO", "WARNING", "ERROR", "FATAL"],
            help="log level",
        )

        self.build_conf(parser, args)

    def build_conf(self, parser, args=None):
        """Initialize the parameters, then combine the parameters parsed by the parser and the parameters read by config"""
        args = parser.parse_args(args)
        if len(args.inputs) != COMMANDS[args.command]:
            parser.error("{} takes {} input file(s), got {}".format(args.command, COMMANDS[args.command],
                                                                   len(args.inputs)))
        for name in ("beam_width", "max_depth", "trials", "threads", "step_budget", "relabel_steps"):
            value = getattr(args, name)
            if value is not None and value < (0 if name == "relabel_steps" else 1):
                parser.error("--{} must be positive".format(name))
        if args.genus < 0 or args.extra_leaf_pairs < 0:
            parser.error("--genus and --extra_leaf_pairs must be non-negative")
        if not self.read(args.config_path):
            parser.error("cannot read config file {}".format(args.config_path))
        self.namespace = argparse.Namespace()
        self.update(
            dict((name, ast.literal_eval(value)) for section in self.sections() for name, value in self.items(section)))
        self.update(
            dict((name, Fraction(getattr(self.namespace, name, 0)))
                 for name in ("epsilon_ratio", "delta_ratio", "label_low", "label_high")))
        # update config from args, unset flags keep the config value
        self.update(
            dict((name, value) for name, value in vars(args).items() if value is not None or not hasattr(self.namespace, name)))
        return self

    def __repr__(self):
        """repr"""
        s = line = "-" * 25 + "-+-" + "-" * 25 + "\n"
        s += "{:25} | {:^25}\n".format('Param', 'Value') + line
        for name, value in sorted(vars(self.namespace).items()):
            s += "{:25} | {:^25}\n".format(name, str(value))
        s += line

        return s

    def __getattr__(self, attr):
        """getattr"""
        return getattr(self.namespace, attr)

    def __setitem__(self, name, value):
        """setitem"""
        setattr(self.namespace, name, value)

    def __getstate__(self):
        """getstate"""
        return vars(self)

    def __setstate__(self, state):
        """setstate"""
        self.__dict__.update(state)

    def update(self, kwargs):
        """Update parameters"""
        for name, value in kwargs.items():
            setattr(self.namespace, name, value)

        return self


class Environment(object):
    """initialize the enviroment"""
    def __init__(self, args):
        self.args = args
        # init log
        if args.log_path:
            utils.init_log(args.log_path, getattr(logging, args.log_level))
        # init seed
        self.rng = np.random.default_rng(args.seed)
