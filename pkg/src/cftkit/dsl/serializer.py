"""Canonical text form of a SourceModel.

parse(serialize(m)) is structurally identical to m: declaration order is
preserved, ports come first within a block, then events, then logic, and
same-precedence subexpressions are parenthesized so n-ary operator
grouping survives the round trip.
"""

from __future__ import annotations

from ..model import (
    AND,
    OR,
    XOR,
    ComponentDefinition,
    EventRef,
    Gate,
    PortRef,
)
from .source import NodeRef, SourceModel, SystemDecl, TreeDecl

_PREC = {OR: 1, XOR: 2, AND: 3}
_SYM = {OR: "|", XOR: "^", AND: "&"}


def format_probability(p: float) -> str:
    return "%.17g" % p


def format_expr(expr) -> str:
    if isinstance(expr, EventRef):
        return expr.name
    if isinstance(expr, NodeRef):
        return expr.name
    if isinstance(expr, PortRef):
        return f"{expr.port}.{expr.mode}"
    if isinstance(expr, Gate):
        prec = _PREC[expr.op]
        parts = []
        for a in expr.args:
            text = format_expr(a)
            if isinstance(a, Gate) and _PREC[a.op] <= prec:
                text = f"({text})"
            parts.append(text)
        return f" {_SYM[expr.op]} ".join(parts)
    raise TypeError(f"bad expression node {expr!r}")


def _component_lines(d: ComponentDefinition) -> list[str]:
    lines = [f"component {d.name} {{"]
    for p in d.ports:
        lines.append(f"  {p.direction} {p.name}: {', '.join(p.modes)}")
    for e in d.events:
        lines.append(f"  event {e.name} p={format_probability(e.probability)}")
    for o in d.outputs:
        lines.append(f"  {o.port}.{o.mode} = {format_expr(o.expr)}")
    lines.append("}")
    return lines


def _system_lines(d: SystemDecl) -> list[str]:
    lines = [f"system {d.name} {{"]
    for i in d.instances:
        lines.append(f"  inst {i.name}: {i.definition}")
    for c in d.connections:
        lines.append(
            f"  connect {c.source.instance}.{c.source.port} -> "
            f"{c.target.instance}.{c.target.port}"
        )
    for t in d.top_events:
        lines.append(f'  top {t.instance}.{t.port}.{t.mode} as "{t.name}"')
    lines.append("}")
    return lines


def _tree_lines(d: TreeDecl) -> list[str]:
    lines = [f"tree {d.name} {{"]
    for e in d.events:
        lines.append(f"  event {e.name} p={format_probability(e.probability)}")
    for name, expr in d.nodes:
        lines.append(f"  {name} = {format_expr(expr)}")
    for node_name, top_name in d.tops:
        lines.append(f'  top {node_name} as "{top_name}"')
    lines.append("}")
    return lines


def serialize_model(m: SourceModel) -> str:
    blocks = []
    for d in m.declarations:
        if isinstance(d, ComponentDefinition):
            blocks.append("\n".join(_component_lines(d)))
        elif isinstance(d, SystemDecl):
            blocks.append("\n".join(_system_lines(d)))
        elif isinstance(d, TreeDecl):
            blocks.append("\n".join(_tree_lines(d)))
        else:
            raise TypeError(f"bad declaration {d!r}")
    if not blocks:
        return ""
    return "\n\n".join(blocks) + "\n"
