"""Structural metrics over definitions, systems, and their flattenings.

These back the structural claims about component-wise modeling: reuse
counts (redundancy by instance doubling), per-component top events
(output modes declared only where relevant), and size/sharing statistics
of the generated classic tree.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import ComponentDefinition, Gate, SystemModel
from .flatten import flatten
from .tree import GateNode, depth, iter_nodes


def _gate_count(expr) -> int:
    if isinstance(expr, Gate):
        return 1 + sum(_gate_count(a) for a in expr.args)
    return 0


@dataclass(frozen=True)
class DefinitionMetrics:
    name: str
    port_count: int
    input_mode_count: int
    output_mode_count: int
    output_modes: tuple[str, ...]
    event_count: int
    gate_count: int


@dataclass
class MetricsReport:
    system: str
    definitions: list[DefinitionMetrics] = field(default_factory=list)
    instance_count: int = 0
    reuse: dict[str, int] = field(default_factory=dict)
    top_event_count: int = 0
    flattened_node_count: int = 0
    flattened_depth: int = 0
    shared_node_count: int = 0

    def definition(self, name: str) -> DefinitionMetrics | None:
        for d in self.definitions:
            if d.name == name:
                return d
        return None


def definition_metrics(defn: ComponentDefinition) -> DefinitionMetrics:
    return DefinitionMetrics(
        name=defn.name,
        port_count=len(defn.ports),
        input_mode_count=sum(len(p.modes) for p in defn.input_ports()),
        output_mode_count=sum(len(p.modes) for p in defn.output_ports()),
        output_modes=tuple(
            m for p in defn.output_ports() for m in p.modes
        ),
        event_count=len(defn.events),
        gate_count=sum(_gate_count(o.expr) for o in defn.outputs),
    )


def model_metrics(sys: SystemModel) -> MetricsReport:
    report = MetricsReport(system=sys.name)
    report.definitions = [definition_metrics(d) for d in sys.definitions]
    report.instance_count = len(sys.instances)
    report.reuse = {d.name: 0 for d in sys.definitions}
    for inst in sys.instances:
        report.reuse[inst.definition] = report.reuse.get(inst.definition, 0) + 1
    report.top_event_count = len(sys.top_events)

    tree = flatten(sys)
    refs: dict[int, int] = {}
    nodes = []
    for root in tree.roots.values():
        for node in iter_nodes(root):
            if id(node) not in refs:
                refs[id(node)] = 0
                nodes.append(node)
    for node in nodes:
        if isinstance(node, GateNode):
            for c in node.children:
                refs[id(c)] += 1
    for root in tree.roots.values():
        refs[id(root)] += 1

    report.flattened_node_count = len(nodes)
    report.flattened_depth = max(
        (depth(r) for r in tree.roots.values()), default=0
    )
    report.shared_node_count = sum(1 for n in refs.values() if n > 1)
    return report
