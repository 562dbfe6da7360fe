"""Validation of component definitions and system compositions.

System validation includes the port-level cycle check: the composition may
be cyclic at instance granularity (cross-coupled redundancy channels are),
but the dependency graph over (instance, port, mode) triples must be
acyclic. Cycle errors carry the full port-level path.
"""

from __future__ import annotations

from .model import (
    ComponentDefinition,
    EventRef,
    Gate,
    PortRef,
    SystemModel,
    ValidationReport,
    is_identifier,
)


def _expr_refs(expr):
    """All PortRef/EventRef leaves of an expression, left to right."""
    if isinstance(expr, Gate):
        for a in expr.args:
            yield from _expr_refs(a)
    else:
        yield expr


def validate_definition(defn: ComponentDefinition) -> ValidationReport:
    rep = ValidationReport()
    loc = f"component {defn.name}"
    if not is_identifier(defn.name):
        rep.error(f"invalid identifier {defn.name!r}", loc)

    seen_ports: set[str] = set()
    for p in defn.ports:
        ploc = f"{loc}, port {p.name}"
        if not is_identifier(p.name):
            rep.error(f"invalid identifier {p.name!r}", ploc)
        if p.name in seen_ports:
            rep.error(f"duplicate port name {p.name!r}", loc)
        seen_ports.add(p.name)
        if not p.modes:
            rep.error("port has no failure modes", ploc)
        seen_modes: set[str] = set()
        for m in p.modes:
            if not is_identifier(m):
                rep.error(f"invalid identifier {m!r}", ploc)
            if m in seen_modes:
                rep.error(f"duplicate failure mode {m!r}", ploc)
            seen_modes.add(m)

    seen_events: set[str] = set()
    for e in defn.events:
        eloc = f"{loc}, event {e.name}"
        if not is_identifier(e.name):
            rep.error(f"invalid identifier {e.name!r}", eloc)
        if e.name in seen_events:
            rep.error(f"duplicate event name {e.name!r}", loc)
        seen_events.add(e.name)
        if e.probability is not None and not 0.0 <= e.probability <= 1.0:
            rep.error(
                f"probability {e.probability!r} outside [0, 1]", eloc
            )

    input_modes = {
        (p.name, m) for p in defn.input_ports() for m in p.modes
    }
    output_modes = [
        (p.name, m) for p in defn.output_ports() for m in p.modes
    ]

    defined: set[tuple[str, str]] = set()
    referenced_inputs: set[tuple[str, str]] = set()
    for o in defn.outputs:
        oloc = f"{loc}, output {o.port}.{o.mode}"
        if (o.port, o.mode) not in output_modes:
            rep.error(
                f"logic assigned to unknown output mode {o.port}.{o.mode}", loc
            )
        if (o.port, o.mode) in defined:
            rep.error(
                f"duplicate logic for output mode {o.port}.{o.mode}", loc
            )
        defined.add((o.port, o.mode))
        for ref in _expr_refs(o.expr):
            if isinstance(ref, EventRef):
                if ref.name not in seen_events:
                    rep.error(f"unresolved reference {ref.name}", oloc)
            elif isinstance(ref, PortRef):
                if (ref.port, ref.mode) in input_modes:
                    referenced_inputs.add((ref.port, ref.mode))
                elif (ref.port, ref.mode) in output_modes:
                    rep.error(
                        f"output mode {ref.port}.{ref.mode} referenced in "
                        "logic (outputs may not reference outputs)",
                        oloc,
                    )
                else:
                    rep.error(
                        f"unresolved reference {ref.port}.{ref.mode}", oloc
                    )
            else:
                rep.error(f"unknown expression leaf {ref!r}", oloc)

    for port, mode in output_modes:
        if (port, mode) not in defined:
            rep.error(f"no logic for output mode {port}.{mode}", loc)

    for port, mode in sorted(input_modes - referenced_inputs):
        rep.warning(f"unused input mode {port}.{mode}", loc)

    return rep


def _port_level_edges(sys: SystemModel):
    """Dependency edges over (instance, port, mode) triples.

    An edge u -> v means v's value depends on u.
    """
    edges: dict[tuple[str, str, str], list[tuple[str, str, str]]] = {}

    def add(u, v):
        edges.setdefault(u, []).append(v)

    for inst in sys.instances:
        d = sys.definition(inst.definition)
        if d is None:
            continue
        for o in d.outputs:
            tgt = (inst.name, o.port, o.mode)
            for ref in _expr_refs(o.expr):
                if isinstance(ref, PortRef):
                    add((inst.name, ref.port, ref.mode), tgt)
    for c in sys.connections:
        d = sys.instance_definition(c.source.instance)
        if d is None:
            continue
        p = d.port(c.source.port)
        if p is None:
            continue
        for m in p.modes:
            add(
                (c.source.instance, c.source.port, m),
                (c.target.instance, c.target.port, m),
            )
    return edges


def _find_cycle(edges) -> list[tuple[str, str, str]] | None:
    """First cycle found by DFS, as the closed path [n0, ..., nk, n0]."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {u: WHITE for u in edges}
    for vs in edges.values():
        for v in vs:
            color.setdefault(v, WHITE)

    path: list[tuple[str, str, str]] = []

    def dfs(u) -> list | None:
        color[u] = GREY
        path.append(u)
        for v in edges.get(u, ()):
            if color[v] == GREY:
                i = path.index(v)
                return path[i:] + [v]
            if color[v] == WHITE:
                found = dfs(v)
                if found is not None:
                    return found
        path.pop()
        color[u] = BLACK
        return None

    for u in sorted(color):
        if color[u] == WHITE:
            found = dfs(u)
            if found is not None:
                return found
    return None


def validate_system(sys: SystemModel) -> ValidationReport:
    rep = ValidationReport()
    loc = f"system {sys.name}"

    seen_defs: set[str] = set()
    for d in sys.definitions:
        if d.name in seen_defs:
            rep.error(f"duplicate definition {d.name!r}", loc)
        seen_defs.add(d.name)
        sub = validate_definition(d)
        rep.issues.extend(sub.issues)

    seen_insts: set[str] = set()
    for inst in sys.instances:
        if not is_identifier(inst.name):
            rep.error(f"invalid identifier {inst.name!r}", loc)
        if inst.name in seen_insts:
            rep.error(f"duplicate instance name {inst.name!r}", loc)
        seen_insts.add(inst.name)
        if sys.definition(inst.definition) is None:
            rep.error(
                f"instance {inst.name} references unknown definition "
                f"{inst.definition!r}",
                loc,
            )

    drivers: dict[tuple[str, str], int] = {}
    for c in sys.connections:
        cloc = (
            f"{loc}, connect {c.source.instance}.{c.source.port} -> "
            f"{c.target.instance}.{c.target.port}"
        )
        sdef = sys.instance_definition(c.source.instance)
        tdef = sys.instance_definition(c.target.instance)
        if sdef is None or tdef is None:
            rep.error("connection endpoint on unknown instance", cloc)
            continue
        sport = sdef.port(c.source.port)
        tport = tdef.port(c.target.port)
        if sport is None or sport.direction != "out":
            rep.error(
                f"connection source {c.source.instance}.{c.source.port} "
                "is not an output port",
                cloc,
            )
            continue
        if tport is None or tport.direction != "in":
            rep.error(
                f"connection target {c.target.instance}.{c.target.port} "
                "is not an input port",
                cloc,
            )
            continue
        if sport.modes != tport.modes:
            rep.error(
                f"failure-mode mismatch: {list(sport.modes)} vs "
                f"{list(tport.modes)}",
                cloc,
            )
        key = (c.target.instance, c.target.port)
        drivers[key] = drivers.get(key, 0) + 1
        if drivers[key] > 1:
            rep.error(
                f"input port {c.target.instance}.{c.target.port} driven by "
                "more than one connection",
                cloc,
            )

    for inst in sys.instances:
        d = sys.definition(inst.definition)
        if d is None:
            continue
        for p in d.input_ports():
            if (inst.name, p.name) not in drivers:
                for m in p.modes:
                    rep.error(
                        f"undriven input mode {inst.name}.{p.name}.{m}", loc
                    )

    seen_tops: set[str] = set()
    for t in sys.top_events:
        tloc = f"{loc}, top {t.name!r}"
        if t.name in seen_tops:
            rep.error(f"duplicate top-event name {t.name!r}", loc)
        seen_tops.add(t.name)
        d = sys.instance_definition(t.instance)
        if d is None:
            rep.error(f"top event on unknown instance {t.instance!r}", tloc)
            continue
        p = d.port(t.port)
        if p is None or p.direction != "out" or t.mode not in p.modes:
            rep.error(
                f"top event does not resolve to an output mode "
                f"{t.instance}.{t.port}.{t.mode}",
                tloc,
            )

    if rep.ok:
        cycle = _find_cycle(_port_level_edges(sys))
        if cycle is not None:
            path = " -> ".join(".".join(n) for n in cycle)
            rep.error(f"port-level dependency cycle: {path}", loc)

    return rep
