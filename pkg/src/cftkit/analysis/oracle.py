"""Brute-force reference analyses by exhaustive assignment enumeration.

These are the oracles the BDD and cut-set routes are checked against, so
they share no code with either: the cone is compiled to a flat program,
evaluated bit-parallel over every assignment into a packed truth table,
and the enumeration kernels finish from there.
"""

from __future__ import annotations

from array import array

from ..errors import ModelError, NonCoherentTree, OracleLimitError
from ..model import AND, OR
from ..tree import EventNode, FaultTree, Node, has_xor
from .results import CutSetReport, canonical_cut_sets

PROBABILITY_EVENT_LIMIT = 24
CUT_SET_EVENT_LIMIT = 20


def _compile_cone(root: Node):
    """(variable names, gate program) for the cone under root.

    Variables take slots 0..n-1 in first-occurrence DFS order; each gate
    appends a slot computed as (op, child slot indices). The last slot is
    the root (which may itself be a variable).
    """
    names: list[str] = []
    slot: dict[int, int] = {}
    gates: list[tuple[str, tuple[int, ...]]] = []
    var_index: dict[str, int] = {}

    def rec(node: Node) -> int:
        key = id(node)
        if key in slot:
            return slot[key]
        if isinstance(node, EventNode):
            s = var_index.setdefault(node.name, len(names))
            if s == len(names):
                names.append(node.name)
        else:
            children = tuple(rec(c) for c in node.children)
            gates.append((node.op, children))
            s = -len(gates)  # gate slots are negative, 1-based
        slot[key] = s
        return s

    root_slot = rec(root)
    return names, gates, root_slot


def truth_table(ft: FaultTree, top: str, order=None) -> tuple[int, tuple[str, ...]]:
    """Packed truth table of a top event as an arbitrary-width integer.

    Bit a of the result is the function value for the assignment where
    variable i (in the returned order) is failed iff bit i of a is set.
    Evaluation is bit-parallel: every node's full column over all 2^N
    assignments is one big-integer bitwise operation.
    """
    root = ft.root(top)
    names, gates, root_slot = _compile_cone(root)
    if order is not None:
        order = tuple(order)
        if sorted(order) != sorted(names):
            raise ModelError(
                "variable order is not a permutation of the cone's events"
            )
        names_pos = {n: i for i, n in enumerate(order)}
        remap = [names_pos[n] for n in names]
        names = list(order)
    else:
        remap = list(range(len(names)))

    n = len(names)
    width = 1 << n
    # column of variable i: period 2^(i+1), low half zeros, high half ones
    cols: list[int] = [0] * n
    for orig, i in enumerate(remap):
        block = ((1 << (1 << i)) - 1) << (1 << i)
        reps = width // (1 << (i + 1))
        col = 0
        for r in range(reps):
            col |= block << (r * (1 << (i + 1)))
        cols[orig] = col

    gate_vals: list[int] = []

    def value(s: int) -> int:
        return cols[s] if s >= 0 else gate_vals[-s - 1]

    for op, children in gates:
        acc = value(children[0])
        if op == AND:
            for c in children[1:]:
                acc &= value(c)
        elif op == OR:
            for c in children[1:]:
                acc |= value(c)
        else:
            acc ^= value(children[1])
        gate_vals.append(acc)

    return value(root_slot), tuple(names)


def _cone_probs(ft: FaultTree, top: str, names) -> array:
    probs = array("d")
    for name in names:
        p = ft.event_node(name).probability
        if p is None:
            raise ModelError(f"missing probability on basic event {name!r}")
        probs.append(p)
    return probs


def brute_force_probability(ft: FaultTree, top: str) -> float:
    from .. import _kernels

    n = len(ft.cone_events(top))
    if n > PROBABILITY_EVENT_LIMIT:
        raise OracleLimitError(
            f"{n} basic events exceed the oracle limit of "
            f"{PROBABILITY_EVENT_LIMIT}"
        )
    table, names = truth_table(ft, top)
    probs = _cone_probs(ft, top, names)
    packed = table.to_bytes(((1 << len(names)) + 7) // 8, "little")
    return _kernels.weighted_true_sum(packed, len(names), probs)


def brute_force_cut_sets(ft: FaultTree, top: str) -> CutSetReport:
    from .. import _kernels

    root = ft.root(top)
    if has_xor(root):
        raise NonCoherentTree(
            f"top event {top!r} has an xor gate in its cone"
        )
    n = len(ft.cone_events(top))
    if n > CUT_SET_EVENT_LIMIT:
        raise OracleLimitError(
            f"{n} basic events exceed the oracle limit of "
            f"{CUT_SET_EVENT_LIMIT}"
        )
    table, names = truth_table(ft, top)
    packed = table.to_bytes(((1 << len(names)) + 7) // 8, "little")
    masks = _kernels.minimal_true_points(packed, len(names))
    sets = [
        frozenset(names[i] for i in range(len(names)) if (m >> i) & 1)
        for m in masks
    ]
    return CutSetReport(top, canonical_cut_sets(sets))
