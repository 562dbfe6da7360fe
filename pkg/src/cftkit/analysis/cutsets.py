"""Minimal cut sets of coherent (AND/OR only) fault tree cones.

Top-down expansion over the DAG with absorption at every gate, memoized
per node. XOR anywhere in the cone raises NonCoherentTree: replacing XOR
by OR is a modeling decision, not something the tool does silently.
"""

from __future__ import annotations

from ..errors import NonCoherentTree
from ..model import AND, OR
from ..tree import EventNode, FaultTree, Node, has_xor
from .results import CutSetReport, canonical_cut_sets


def _minimize(sets: set[frozenset[str]]) -> set[frozenset[str]]:
    """Keep the antichain of inclusion-minimal sets."""
    by_size = sorted(sets, key=len)
    kept: list[frozenset[str]] = []
    for s in by_size:
        if not any(k <= s for k in kept):
            kept.append(s)
    return set(kept)


def _node_cut_sets(root: Node) -> set[frozenset[str]]:
    memo: dict[int, set[frozenset[str]]] = {}

    def rec(node: Node) -> set[frozenset[str]]:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, EventNode):
            result = {frozenset((node.name,))}
        elif node.op == OR:
            acc: set[frozenset[str]] = set()
            for c in node.children:
                acc |= rec(c)
            result = _minimize(acc)
        elif node.op == AND:
            parts = [rec(c) for c in node.children]
            acc = parts[0]
            for p in parts[1:]:
                acc = {a | b for a in acc for b in p}
                acc = _minimize(acc)
            result = acc
        else:
            raise NonCoherentTree("xor gate in cone")
        memo[key] = result
        return result

    return rec(root)


def minimal_cut_sets(ft: FaultTree, top: str) -> CutSetReport:
    root = ft.root(top)
    if has_xor(root):
        raise NonCoherentTree(
            f"top event {top!r} has an xor gate in its cone; "
            "cut-set semantics are undefined for non-coherent trees"
        )
    return CutSetReport(top, canonical_cut_sets(_node_cut_sets(root)))
