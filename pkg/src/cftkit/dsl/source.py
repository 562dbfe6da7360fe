"""Structured form of a parsed model file.

A source file is an ordered list of declarations: component blocks map
directly onto ComponentDefinition; system and tree blocks keep their own
declaration records and are resolved into SystemModel / FaultTree on
demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..errors import ModelError
from ..model import (
    BasicEvent,
    ComponentDefinition,
    Connection,
    EventRef,
    Gate,
    Instance,
    SystemModel,
    TopEvent,
)
from ..tree import EventNode, FaultTree, GateNode


@dataclass(frozen=True)
class NodeRef:
    """Reference to a named intermediate node inside a tree block."""

    name: str


@dataclass(frozen=True)
class SystemDecl:
    name: str
    instances: tuple[Instance, ...]
    connections: tuple[Connection, ...]
    top_events: tuple[TopEvent, ...]


@dataclass(frozen=True)
class TreeDecl:
    name: str
    events: tuple[BasicEvent, ...]
    nodes: tuple[tuple[str, object], ...]  # (node name, expr)
    tops: tuple[tuple[str, str], ...]  # (node name, top-event name)


Declaration = Union[ComponentDefinition, SystemDecl, TreeDecl]


@dataclass(frozen=True)
class SourceModel:
    declarations: tuple[Declaration, ...]

    def components(self) -> tuple[ComponentDefinition, ...]:
        return tuple(
            d for d in self.declarations if isinstance(d, ComponentDefinition)
        )

    def system_names(self) -> tuple[str, ...]:
        return tuple(
            d.name for d in self.declarations if isinstance(d, SystemDecl)
        )

    def tree_names(self) -> tuple[str, ...]:
        return tuple(
            d.name for d in self.declarations if isinstance(d, TreeDecl)
        )

    def system(self, name: str) -> SystemModel:
        for d in self.declarations:
            if isinstance(d, SystemDecl) and d.name == name:
                return SystemModel(
                    name=d.name,
                    definitions=self.components(),
                    instances=d.instances,
                    connections=d.connections,
                    top_events=d.top_events,
                )
        raise ModelError(f"unknown system {name!r}")

    def tree(self, name: str) -> FaultTree:
        for d in self.declarations:
            if isinstance(d, TreeDecl) and d.name == name:
                return _build_tree(d)
        raise ModelError(f"unknown tree {name!r}")


def _build_tree(decl: TreeDecl) -> FaultTree:
    events = {e.name: EventNode(e.name, e.probability) for e in decl.events}
    exprs = dict(decl.nodes)
    built: dict[str, object] = {}
    in_progress: set[str] = set()

    def node(name: str):
        if name in built:
            return built[name]
        if name in in_progress:
            raise ModelError(f"tree {decl.name}: node cycle through {name!r}")
        in_progress.add(name)
        built[name] = rec(exprs[name])
        in_progress.discard(name)
        return built[name]

    def rec(expr):
        if isinstance(expr, NodeRef):
            if expr.name not in exprs:
                raise ModelError(
                    f"tree {decl.name}: unresolved reference {expr.name}"
                )
            return node(expr.name)
        if isinstance(expr, EventRef):
            if expr.name not in events:
                raise ModelError(
                    f"tree {decl.name}: unresolved reference {expr.name}"
                )
            return events[expr.name]
        if isinstance(expr, Gate):
            return GateNode(expr.op, tuple(rec(a) for a in expr.args))
        raise TypeError(f"bad tree expression leaf {expr!r}")

    roots = {}
    for node_name, top_name in decl.tops:
        if node_name not in exprs:
            raise ModelError(
                f"tree {decl.name}: top references unknown node {node_name!r}"
            )
        roots[top_name] = node(node_name)
    return FaultTree(decl.name, roots)
