"""Logical equivalence of two fault trees over a shared event namespace.

Both top-event functions are built in one BDD manager under one variable
order; canonicity makes equivalence a root-index comparison. On
inequivalence the XOR of the two functions yields a concrete witness
scenario, re-checkable with evaluate_scenario.
"""

from __future__ import annotations

from ..errors import NamespaceMismatch
from ..model import XOR
from ..tree import FaultTree, evaluate_node
from .bdd import BddManager
from .results import EquivalenceVerdict, Witness


def check_equivalence(
    ft1: FaultTree, ft2: FaultTree, top1: str, top2: str
) -> EquivalenceVerdict:
    left = {e.name for e in ft1.cone_events(top1)}
    right = {e.name for e in ft2.cone_events(top2)}
    if left != right:
        raise NamespaceMismatch(left - right, right - left)

    order = tuple(sorted(left))
    mgr = BddManager(order)
    r1 = mgr.build(ft1.root(top1))
    r2 = mgr.build(ft2.root(top2))
    if r1 == r2:
        return EquivalenceVerdict(True, None)

    diff = mgr.apply(XOR, r1, r2)
    failed = mgr.any_satisfying(diff)
    return EquivalenceVerdict(
        False,
        Witness(
            failed=tuple(sorted(failed)),
            left=evaluate_node(ft1.root(top1), failed),
            right=evaluate_node(ft2.root(top2), failed),
        ),
    )
