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
本文件定义了图、形变序列、持续图的JSON读写以及实验结果的CSV输出
"""

import csv
import io
import json

from reebedit.edit.data_struct.diagram import PersistenceDiagram
from reebedit.edit.data_struct.errors import GraphFormatError
from reebedit.edit.data_struct.graph import LabeledReebGraph
from reebedit.edit.data_struct.ops import OP_TYPES
from reebedit.edit.data_struct.utils import format_label
from reebedit.edit.data_struct.utils import parse_label

EXPERIMENT_HEADER = ["delta", "trial", "upper", "lower"]


def _field(obj, name, kind=None):
    if not isinstance(obj, dict) or name not in obj:
        raise GraphFormatError("missing field {!r}".format(name))
    value = obj[name]
    if kind is not None and not isinstance(value, kind):
        raise GraphFormatError("field {!r} has the wrong type".format(name))
    return value


def _vertex_id(value):
    if not isinstance(value, str) or not value:
        raise GraphFormatError("vertex ids must be non-empty strings, got {!r}".format(value))
    return value


def graph_from_json(obj):
    """Build a LabeledReebGraph from its JSON object; structure is left to validate"""
    labels = {}
    seen = {}
    for vertex in _field(obj, "vertices", list):
        vid = _vertex_id(_field(vertex, "id"))
        label = parse_label(_field(vertex, "label"))
        if vid in labels:
            raise GraphFormatError("duplicate vertex id {!r}".format(vid))
        if label in seen:
            raise GraphFormatError("duplicate label {} on {!r} and {!r}".format(format_label(label), seen[label], vid))
        labels[vid] = label
        seen[label] = vid
    edges = []
    for edge in _field(obj, "edges", list):
        if not isinstance(edge, list) or len(edge) != 2:
            raise GraphFormatError("edges must be two-element id arrays, got {!r}".format(edge))
        edges.append((_vertex_id(edge[0]), _vertex_id(edge[1])))
    return LabeledReebGraph(labels, edges)


def graph_to_json(graph):
    """json style graph"""
    return {
        "vertices": [{
            "id": v,
            "label": format_label(graph.label(v))
        } for v in graph.vertices],
        "edges": [[a, b] for a, b in graph.edges()],
    }


def op_to_json(op):
    """json style edit op"""
    labels = lambda values: [format_label(x) for x in values]
    if op.kind == "B":
        return {"type": "B", "edge": list(op.edge), "new_ids": list(op.new_ids),
                "new_labels": labels(op.new_labels), "attach": op.attach}
    if op.kind == "D":
        return {"type": "D", "u1": op.u1, "u2": op.u2}
    if op.kind == "R":
        return {"type": "R", "new_labels": dict((v, format_label(x)) for v, x in op.new_labels.items())}
    result = {"type": op.kind, "u1": op.u1, "u2": op.u2, "new_labels": labels(op.new_labels)}
    if op.kind == "K1":
        result.update(orientation=op.orientation, moved=op.moved)
    elif op.kind == "K2":
        result.update(moved_low=op.moved_low, moved_high=op.moved_high)
    return result


def _label_pair(obj):
    values = _field(obj, "new_labels", list)
    if len(values) != 2:
        raise GraphFormatError("new_labels must hold two labels")
    return tuple(parse_label(x) for x in values)


def _optional_id(obj, name):
    value = obj.get(name)
    return None if value is None else _vertex_id(value)


def op_from_json(obj):
    """EditOp from its JSON object"""
    kind = _field(obj, "type")
    if kind not in OP_TYPES:
        raise GraphFormatError("unknown op type {!r}".format(kind))
    if kind == "B":
        edge = _field(obj, "edge", list)
        new_ids = _field(obj, "new_ids", list)
        if len(edge) != 2 or len(new_ids) != 2:
            raise GraphFormatError("birth needs an edge and two new ids")
        return OP_TYPES[kind](tuple(map(_vertex_id, edge)), tuple(map(_vertex_id, new_ids)), _label_pair(obj),
                              _vertex_id(_field(obj, "attach")))
    if kind == "D":
        return OP_TYPES[kind](_vertex_id(_field(obj, "u1")), _vertex_id(_field(obj, "u2")))
    if kind == "R":
        mapping = _field(obj, "new_labels", dict)
        return OP_TYPES[kind](dict((_vertex_id(v), parse_label(x)) for v, x in mapping.items()))
    u1, u2 = _vertex_id(_field(obj, "u1")), _vertex_id(_field(obj, "u2"))
    if kind == "K1":
        return OP_TYPES[kind](u1, u2, _label_pair(obj), _field(obj, "orientation"), _optional_id(obj, "moved"))
    if kind == "K2":
        return OP_TYPES[kind](u1, u2, _label_pair(obj), _optional_id(obj, "moved_low"), _optional_id(obj, "moved_high"))
    return OP_TYPES[kind](u1, u2, _label_pair(obj))


def sequence_to_json(ops, start):
    """replayable sequence file content"""
    return {"start_graph": graph_to_json(start), "ops": [op_to_json(op) for op in ops]}


def sequence_from_json(obj):
    """(start graph, list of ops) from a sequence file"""
    start = graph_from_json(_field(obj, "start_graph", dict))
    return start, [op_from_json(op) for op in _field(obj, "ops", list)]


def diagram_from_json(obj):
    """PersistenceDiagram from its JSON object"""
    points = lambda name: [tuple(parse_label(x) for x in p) for p in _field(obj, name, list)]
    ess0 = obj.get("ess0") if isinstance(obj, dict) else None
    return PersistenceDiagram(ord0=points("ord0"),
                              rel_ord0_neg=points("rel_ord0_neg"),
                              ess0=None if ess0 is None else tuple(parse_label(x) for x in ess0),
                              ess1=points("ess1"))


def load_json(path):
    """read a JSON file"""
    with io.open(path, "r", encoding="utf8") as f:
        try:
            return json.load(f)
        except ValueError as e:
            raise GraphFormatError("{}: {}".format(path, e))


def dumps(obj, pretty=False):
    """deterministic JSON text"""
    if pretty:
        return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def dump_json(obj, path, pretty=False):
    """write a JSON file"""
    with io.open(path, "w", encoding="utf8") as f:
        f.write(dumps(obj, pretty) + "\n")


def experiment_csv(rows):
    """CSV text with the experiment header"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(EXPERIMENT_HEADER)
    for row in rows:
        writer.writerow([format_label(row.delta), row.trial, format_label(row.upper), format_label(row.lower)])
    return buffer.getvalue()
