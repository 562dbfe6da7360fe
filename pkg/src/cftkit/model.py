"""Domain types for component failure models and their composition.

A ComponentDefinition packages the failure logic of one reusable component:
failure-mode ports on its boundary, internal basic events, and one gate
expression per (output port, mode). A SystemModel instantiates definitions
and wires output ports to input ports; named top events select an
(instance, output port, mode) to analyze.

All types are immutable after construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Union

IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

AND = "and"
OR = "or"
XOR = "xor"
GATE_OPS = (AND, OR, XOR)


def is_identifier(name: str) -> bool:
    return bool(IDENT_RE.match(name))


@dataclass(frozen=True)
class Port:
    """A failure-propagation port: a named bundle of failure-mode labels."""

    name: str
    direction: str  # "in" | "out"
    modes: tuple[str, ...]

    def __post_init__(self):
        if self.direction not in ("in", "out"):
            raise ValueError(f"bad port direction {self.direction!r}")


@dataclass(frozen=True)
class BasicEvent:
    """An atomic internal failure cause with a per-demand probability."""

    name: str
    probability: float | None = None


@dataclass(frozen=True)
class PortRef:
    """Reference to (input port, mode) inside a gate expression."""

    port: str
    mode: str


@dataclass(frozen=True)
class EventRef:
    """Reference to a basic event inside a gate expression."""

    name: str


@dataclass(frozen=True)
class Gate:
    op: str
    args: tuple["Expr", ...]

    def __post_init__(self):
        if self.op not in GATE_OPS:
            raise ValueError(f"unknown gate operator {self.op!r}")
        if self.op == XOR and len(self.args) != 2:
            raise ValueError("xor takes exactly 2 operands")
        if len(self.args) < 2:
            raise ValueError(f"{self.op} takes at least 2 operands")


Expr = Union[PortRef, EventRef, Gate]


@dataclass(frozen=True)
class OutputLogic:
    """Gate expression driving one (output port, mode) pair."""

    port: str
    mode: str
    expr: Expr


@dataclass(frozen=True)
class ComponentDefinition:
    name: str
    ports: tuple[Port, ...]
    events: tuple[BasicEvent, ...]
    outputs: tuple[OutputLogic, ...]

    def port(self, name: str) -> Port | None:
        for p in self.ports:
            if p.name == name:
                return p
        return None

    def input_ports(self) -> tuple[Port, ...]:
        return tuple(p for p in self.ports if p.direction == "in")

    def output_ports(self) -> tuple[Port, ...]:
        return tuple(p for p in self.ports if p.direction == "out")

    def event(self, name: str) -> BasicEvent | None:
        for e in self.events:
            if e.name == name:
                return e
        return None

    def output_expr(self, port: str, mode: str) -> Expr | None:
        for o in self.outputs:
            if o.port == port and o.mode == mode:
                return o.expr
        return None


@dataclass(frozen=True)
class Instance:
    name: str
    definition: str


@dataclass(frozen=True)
class PortEnd:
    instance: str
    port: str


@dataclass(frozen=True)
class Connection:
    source: PortEnd  # an instance output port
    target: PortEnd  # an instance input port


@dataclass(frozen=True)
class TopEvent:
    name: str
    instance: str
    port: str
    mode: str


@dataclass(frozen=True)
class SystemModel:
    name: str
    definitions: tuple[ComponentDefinition, ...]
    instances: tuple[Instance, ...]
    connections: tuple[Connection, ...]
    top_events: tuple[TopEvent, ...]

    def definition(self, name: str) -> ComponentDefinition | None:
        for d in self.definitions:
            if d.name == name:
                return d
        return None

    def instance(self, name: str) -> Instance | None:
        for i in self.instances:
            if i.name == name:
                return i
        return None

    def instance_definition(self, name: str) -> ComponentDefinition | None:
        inst = self.instance(name)
        if inst is None:
            return None
        return self.definition(inst.definition)

    def driver(self, instance: str, port: str) -> PortEnd | None:
        """The output port wired into the given input port, if any."""
        for c in self.connections:
            if c.target.instance == instance and c.target.port == port:
                return c.source
        return None

    def top_event(self, name: str) -> TopEvent | None:
        for t in self.top_events:
            if t.name == name:
                return t
        return None

    def qualified_events(self) -> tuple[tuple[str, float | None], ...]:
        """All (instancePath.eventName, probability) pairs, declaration order."""
        out = []
        for inst in self.instances:
            d = self.definition(inst.definition)
            if d is None:
                continue
            for e in d.events:
                out.append((f"{inst.name}.{e.name}", e.probability))
        return tuple(out)


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    message: str
    location: str


@dataclass
class ValidationReport:
    issues: list[Issue] = field(default_factory=list)

    def error(self, message: str, location: str) -> None:
        self.issues.append(Issue("error", message, location))

    def warning(self, message: str, location: str) -> None:
        self.issues.append(Issue("warning", message, location))

    @property
    def errors(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "error"]

    @property
    def warnings(self) -> list[Issue]:
        return [i for i in self.issues if i.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def lines(self) -> list[str]:
        return [f"{i.severity}: {i.location}: {i.message}" for i in self.issues]
