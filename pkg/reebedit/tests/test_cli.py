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
命令行与ReebEdit接口的测试
"""

import json
import os
from fractions import Fraction

import pytest

from reebedit import ReebEdit
from reebedit.edit.data_struct import LabeledReebGraph
from reebedit.edit.data_struct import corpus
from reebedit.edit.data_struct.graph import genus
from reebedit.edit.data_struct.graph import validate
from reebedit.run import run
from reebedit.tests.samples import min_max
from reebedit.tests.samples import three_bumps
from reebedit.tests.samples import torus


@pytest.fixture
def write_graph(tmp_path):
    """dump a graph (or raw JSON object) to a file and return its path"""
    def write(name, graph):
        path = str(tmp_path / name)
        obj = graph if isinstance(graph, dict) else corpus.graph_to_json(graph)
        corpus.dump_json(obj, path)
        return path

    return write


def _shifted_torus(delta):
    g = torus()
    return LabeledReebGraph(dict((v, g.label(v) + delta) for v in g.vertices), g.edges())


def _out(capsys):
    return json.loads(capsys.readouterr().out)


def test_validate(write_graph, capsys):
    assert run(["validate", write_graph("t.json", torus())]) == 0
    out = _out(capsys)
    assert out["ok"] and out["genus"] == 1 and out["violations"] == []


def test_validate_invalid(write_graph, capsys):
    path = write_graph("bad.json", {"vertices": [{"id": "m", "label": "0"}, {"id": "M", "label": "1"}], "edges": []})
    assert run(["validate", path]) == 1
    out = _out(capsys)
    assert not out["ok"]
    assert out["genus"] is None
    assert out["violations"]


def test_usage_errors(write_graph):
    assert run(["connect", write_graph("t.json", torus())]) == 2
    assert run(["dist"]) == 2
    assert run(["nope"]) == 2
    assert run(["dist", "a.json", "b.json", "--beam", "0"]) == 2


def test_missing_file(tmp_path, capsys):
    assert run(["info", str(tmp_path / "missing.json")]) == 1
    assert capsys.readouterr().err.startswith("reebedit: ")


def test_info(write_graph, capsys):
    assert run(["info", write_graph("t.json", torus())]) == 0
    out = _out(capsys)
    assert out["genus"] == 1
    assert out["minima"] == 1 and out["maxima"] == 1
    assert out["canonical"] and out["minimal"]
    assert out["classes"]["s1"] == "splitting_saddle"
    assert out["diagram"]["ess1"] == [["2", "1"]]


def test_gen(tmp_path):
    path = str(tmp_path / "g.json")
    assert run(["gen", "--genus", "2", "--extra_leaf_pairs", "1", "--seed", "5", "-o", path]) == 0
    graph = corpus.graph_from_json(corpus.load_json(path))
    assert validate(graph).ok
    assert genus(graph) == 2
    assert graph.num_vertices == 8
    again = str(tmp_path / "h.json")
    run(["gen", "--genus", "2", "--extra_leaf_pairs", "1", "--seed", "5", "-o", again])
    assert corpus.load_json(path) == corpus.load_json(again)


def test_canon_then_replay(write_graph, tmp_path):
    out = str(tmp_path / "canon.json")
    assert run(["canon", write_graph("b.json", three_bumps()), "-o", out]) == 0
    canon = corpus.load_json(out)
    assert canon["total_cost"] == "3"
    assert canon["rounds"] == 0
    replayed = str(tmp_path / "replay.json")
    assert run(["replay", out, "-o", replayed]) == 0
    result = corpus.load_json(replayed)
    assert result["final_graph"] == canon["canonical_graph"]
    assert result["length"] == len(canon["ops"])
    assert result["total_cost"] == "3"


def test_connect_genus_mismatch(write_graph, capsys):
    assert run(["connect", write_graph("t.json", torus()), write_graph("s.json", min_max())]) == 1
    assert "genus mismatch 1 vs 0" in capsys.readouterr().err


def test_dist_with_witness(write_graph, tmp_path, capsys):
    witness = str(tmp_path / "witness.json")
    g1, g2 = write_graph("a.json", torus()), write_graph("b.json", _shifted_torus(Fraction(1, 10)))
    assert run(["dist", g1, g2, "--beam", "2", "--depth", "1", "--witness_path", witness, "--pretty"]) == 0
    text = capsys.readouterr().out
    assert "\n  " in text
    out = json.loads(text)
    assert out["lower"] == out["upper"] == "0.1"
    assert out["witness"] == witness
    assert run(["replay", witness]) == 0
    replayed = _out(capsys)
    assert replayed["final_graph"] == corpus.load_json(g2)


def test_dist_identical(write_graph, capsys):
    path = write_graph("t.json", torus())
    assert run(["dist", path, path, "--beam", "32", "--depth", "12", "--seed", "7"]) == 0
    out = _out(capsys)
    assert out["lower"] == "0" and out["upper"] == "0"


def test_dist_genus_mismatch(write_graph, capsys):
    assert run(["dist", write_graph("t.json", torus()), write_graph("s.json", min_max(0, 3))]) == 1
    captured = capsys.readouterr()
    out = json.loads(captured.out)
    assert out["upper"] is None and out["witness"] is None
    assert out["lower"] == "0"
    assert "reebedit: genus mismatch 1 vs 0\n" in captured.err


def test_pd_methods(write_graph, capsys):
    path = write_graph("b.json", three_bumps())
    assert run(["pd", path]) == 0
    sweep = _out(capsys)
    assert run(["pd", path, "--method", "reduction"]) == 0
    assert _out(capsys) == sweep
    assert sweep["rel_ord0_neg"] == [["3", "1"], ["6", "4"], ["9", "7"]]


def test_bottleneck(write_graph, tmp_path, capsys):
    g1, g2 = write_graph("a.json", torus()), write_graph("b.json", _shifted_torus(Fraction(1, 4)))
    assert run(["bottleneck", g1, g2]) == 0
    assert _out(capsys)["value"] == "0.25"
    diagram = str(tmp_path / "d.json")
    assert run(["pd", g2, "-o", diagram]) == 0
    assert run(["bottleneck", g1, diagram]) == 0
    assert _out(capsys)["value"] == "0.25"


def test_stability(write_graph, tmp_path):
    out = str(tmp_path / "rows.csv")
    args = ["stability-exp", write_graph("t.json", torus()), "--delta", "0.1", "--trials", "3", "--beam", "1",
            "--depth", "1", "-o", out]
    assert run(args) == 0
    with open(out) as f:
        lines = f.read().splitlines()
    assert lines[0] == "delta,trial,upper,lower"
    assert len(lines) == 4


def test_log_path(write_graph, log_path, capsys):
    assert run(["info", write_graph("t.json", torus()), "--log_path", log_path]) == 0
    assert os.path.exists(log_path + ".log")
    capsys.readouterr()


def test_facade():
    rd = ReebEdit(beam_width=2, max_depth=1)
    assert rd.validate(corpus.graph_to_json(torus())).ok
    report = rd.distance(torus(), _shifted_torus(Fraction(1, 10)))
    assert report.exact and report.upper == Fraction(1, 10)
    assert rd.canonicalize(three_bumps()).canonical_graph.num_vertices == 2
    assert rd.bottleneck(torus(), corpus.graph_to_json(torus())).value == 0
    assert len(rd.connect(torus(), torus())) >= 1
