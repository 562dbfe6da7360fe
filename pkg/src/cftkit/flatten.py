"""Flattening a system composition into a classic fault tree.

Each (instance, output port, mode) is expanded by substituting its gate
expression, rewriting input-mode references through the system's
connections, and qualifying basic events by instance name. An output mode
reached over several propagation paths expands to one shared node, so
fan-out (one output driving several inputs) yields DAG sharing rather
than copies.
"""

from __future__ import annotations

from .errors import ModelError
from .model import EventRef, PortRef, SystemModel
from .tree import EventNode, FaultTree, GateNode, Node
from .validate import validate_system


def flatten_with_index(sys: SystemModel):
    """Flatten and also return the (instance, port, mode) -> node map."""
    rep = validate_system(sys)
    if not rep.ok:
        detail = "; ".join(i.message for i in rep.errors)
        raise ModelError(f"invalid system {sys.name}: {detail}", report=rep)

    out_nodes: dict[tuple[str, str, str], Node] = {}
    event_nodes: dict[tuple[str, str], EventNode] = {}

    def event_node(instance: str, name: str, probability) -> EventNode:
        key = (instance, name)
        node = event_nodes.get(key)
        if node is None:
            node = EventNode(f"{instance}.{name}", probability)
            event_nodes[key] = node
        return node

    def expand_expr(instance: str, expr) -> Node:
        defn = sys.instance_definition(instance)
        if isinstance(expr, EventRef):
            ev = defn.event(expr.name)
            return event_node(instance, ev.name, ev.probability)
        if isinstance(expr, PortRef):
            src = sys.driver(instance, expr.port)
            return expand_output(src.instance, src.port, expr.mode)
        return GateNode(
            expr.op,
            tuple(expand_expr(instance, a) for a in expr.args),
            origin=instance,
        )

    def expand_output(instance: str, port: str, mode: str) -> Node:
        key = (instance, port, mode)
        node = out_nodes.get(key)
        if node is None:
            defn = sys.instance_definition(instance)
            node = expand_expr(instance, defn.output_expr(port, mode))
            out_nodes[key] = node
        return node

    roots = {
        t.name: expand_output(t.instance, t.port, t.mode)
        for t in sys.top_events
    }
    return FaultTree(sys.name, roots), out_nodes


def flatten(sys: SystemModel) -> FaultTree:
    tree, _ = flatten_with_index(sys)
    return tree


def instance_fragment_signature(sys: SystemModel, instance: str):
    """Canonical shape of one instance's own flattened contribution.

    The fragment covers the instance's gate logic and internal events;
    input-mode references stay opaque leaves labeled by (port, mode). Two
    instances of the same definition must produce equal signatures with
    the local event names stripped of their instance prefix.
    """
    defn = sys.instance_definition(instance)
    if defn is None:
        raise ModelError(f"unknown instance {instance!r}")

    def sig(expr):
        if isinstance(expr, EventRef):
            return ("event", expr.name)
        if isinstance(expr, PortRef):
            return ("input", expr.port, expr.mode)
        return ("gate", expr.op, tuple(sig(a) for a in expr.args))

    return tuple(
        ((o.port, o.mode), sig(o.expr)) for o in defn.outputs
    )


def flattened_fragment_signature(sys: SystemModel, instance: str):
    """Like instance_fragment_signature, but read off the flattened tree.

    Walks the flattened DAG from the instance's output-mode nodes, stopping
    at nodes contributed by other instances (opaque "ext" leaves) and
    stripping the instance prefix from local event names.
    """
    tree, index = flatten_with_index(sys)
    defn = sys.instance_definition(instance)
    if defn is None:
        raise ModelError(f"unknown instance {instance!r}")
    prefix = instance + "."

    def sig(node):
        if isinstance(node, EventNode):
            if node.name.startswith(prefix):
                return ("event", node.name[len(prefix):])
            return ("ext",)
        if node.origin != instance:
            return ("ext",)
        return ("gate", node.op, tuple(sig(c) for c in node.children))

    out = []
    for o in defn.outputs:
        node = index.get((instance, o.port, o.mode))
        if node is not None:
            out.append(((o.port, o.mode), sig(node)))
    return tuple(out)


def instance_event_names(sys: SystemModel, instance: str) -> frozenset[str]:
    defn = sys.instance_definition(instance)
    if defn is None:
        raise ModelError(f"unknown instance {instance!r}")
    return frozenset(f"{instance}.{e.name}" for e in defn.events)
