"""DOT and JSON exports, plus FaultTree -> tree-block conversion.

All output is deterministic: node IDs follow depth-first discovery order,
JSON key order is fixed, and floats print with 17 significant digits.
"""

from __future__ import annotations

import json

from ..errors import ModelError
from ..metrics import MetricsReport
from ..model import BasicEvent, EventRef, Gate
from ..tree import EventNode, FaultTree, GateNode, Node, iter_nodes
from ..analysis.results import (
    CutSetReport,
    EquivalenceVerdict,
    ProbabilityResult,
)
from .serializer import format_probability
from .source import NodeRef, TreeDecl

_GATE_SHAPE = {"and": "invtrapezium", "or": "ellipse", "xor": "diamond"}


def export_dot(ft: FaultTree, top: str) -> str:
    root = ft.root(top)
    ids: dict[int, str] = {}
    lines = ["digraph fault_tree {", "  rankdir=BT;"]
    for node in iter_nodes(root):
        nid = f"n{len(ids)}"
        ids[id(node)] = nid
        if isinstance(node, EventNode):
            label = node.name
            if node.probability is not None:
                label += f"\\np={format_probability(node.probability)}"
            lines.append(f'  {nid} [shape=box, label="{label}"];')
        else:
            lines.append(
                f"  {nid} [shape={_GATE_SHAPE[node.op]}, "
                f'label="{node.op.upper()}"];'
            )
    for node in iter_nodes(root):
        if isinstance(node, GateNode):
            for c in node.children:
                lines.append(f"  {ids[id(c)]} -> {ids[id(node)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_decl(ft: FaultTree, tops=None) -> TreeDecl:
    """Rebuild a serializable tree block from a fault tree DAG.

    Gate nodes get generated names g0, g1, ... in depth-first discovery
    order over the selected roots; sharing is preserved through node
    references.
    """
    if tops is None:
        tops = ft.top_names
    gate_names: dict[int, str] = {}
    events: list[EventNode] = []
    seen_events: set[int] = set()
    order: list[GateNode] = []
    for top in tops:
        for node in iter_nodes(ft.root(top)):
            if isinstance(node, GateNode):
                if id(node) not in gate_names:
                    gate_names[id(node)] = f"g{len(gate_names)}"
                    order.append(node)
            elif id(node) not in seen_events:
                seen_events.add(id(node))
                events.append(node)

    def as_expr(node: Node):
        if isinstance(node, EventNode):
            return EventRef(node.name)
        return NodeRef(gate_names[id(node)])

    nodes = []
    for g in reversed(order):  # children before parents
        nodes.append(
            (gate_names[id(g)], Gate(g.op, tuple(as_expr(c) for c in g.children)))
        )

    top_pairs = []
    for top in tops:
        root = ft.root(top)
        if isinstance(root, EventNode):
            raise ModelError(
                f"top event {top!r} is a bare basic event; "
                "tree blocks root at named nodes"
            )
        top_pairs.append((gate_names[id(root)], top))
    return TreeDecl(
        ft.name,
        tuple(BasicEvent(e.name, e.probability) for e in events),
        tuple(nodes),
        tuple(top_pairs),
    )


def _dump(value) -> str:
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return format_probability(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_dump(v) for v in value) + "]"
    if isinstance(value, dict):
        return (
            "{"
            + ",".join(f"{json.dumps(k)}:{_dump(v)}" for k, v in value.items())
            + "}"
        )
    raise TypeError(f"cannot serialize {value!r}")


def result_to_obj(result):
    if isinstance(result, ProbabilityResult):
        return {
            "kind": "probability",
            "top": result.top,
            "exact": result.exact,
            "rare_event_upper_bound": result.rare_event_upper_bound,
        }
    if isinstance(result, CutSetReport):
        return {
            "kind": "cut_sets",
            "top": result.top,
            "cut_sets": [list(cs) for cs in result.cut_sets],
        }
    if isinstance(result, EquivalenceVerdict):
        witness = None
        if result.witness is not None:
            witness = {
                "failed": list(result.witness.failed),
                "left": result.witness.left,
                "right": result.witness.right,
            }
        return {
            "kind": "equivalence",
            "equivalent": result.equivalent,
            "witness": witness,
        }
    if isinstance(result, MetricsReport):
        return {
            "kind": "metrics",
            "system": result.system,
            "definitions": [
                {
                    "name": d.name,
                    "ports": d.port_count,
                    "input_modes": d.input_mode_count,
                    "output_modes": d.output_mode_count,
                    "output_mode_names": list(d.output_modes),
                    "events": d.event_count,
                    "gates": d.gate_count,
                }
                for d in result.definitions
            ],
            "instances": result.instance_count,
            "reuse": dict(result.reuse),
            "top_events": result.top_event_count,
            "flattened_nodes": result.flattened_node_count,
            "flattened_depth": result.flattened_depth,
            "shared_nodes": result.shared_node_count,
        }
    raise TypeError(f"cannot export result {result!r}")


def export_results_json(results) -> str:
    return _dump({"results": [result_to_obj(r) for r in results]})


def export_tree_json(ft: FaultTree, tops=None) -> str:
    """JSON form of a flattened tree (events, named gates, roots)."""
    decl = tree_to_decl(ft, tops)
    from .serializer import format_expr

    return _dump(
        {
            "tree": decl.name,
            "events": [
                {"name": e.name, "probability": e.probability}
                for e in decl.events
            ],
            "nodes": [
                {"name": name, "expr": format_expr(expr)}
                for name, expr in decl.nodes
            ],
            "tops": [
                {"node": node, "name": name} for node, name in decl.tops
            ],
        }
    )
