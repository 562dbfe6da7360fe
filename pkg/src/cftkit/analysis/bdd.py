"""Reduced ordered BDDs over qualified basic-event variables.

Nodes are integers into a manager-owned table: 0 and 1 are the terminals,
internal entries are (level, low, high) triples kept unique through a hash
table, so structural reduction is maintained by construction and two
functions are equal iff their root indices coincide within one manager.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import ModelError
from ..model import AND, OR
from ..tree import EventNode, FaultTree, Node

ZERO = 0
ONE = 1


class BddManager:
    def __init__(self, order):
        self.order = tuple(order)
        self.level = {name: i for i, name in enumerate(self.order)}
        if len(self.level) != len(self.order):
            raise ModelError("variable order contains duplicates")
        # table[i] = (level, low, high) for i >= 2
        self.table: list[tuple[int, int, int]] = [None, None]
        self.unique: dict[tuple[int, int, int], int] = {}
        self.apply_cache: dict[tuple[str, int, int], int] = {}

    def mk(self, level: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (level, low, high)
        u = self.unique.get(key)
        if u is None:
            u = len(self.table)
            self.table.append(key)
            self.unique[key] = u
        return u

    def var(self, name: str) -> int:
        return self.mk(self.level[name], ZERO, ONE)

    def node_level(self, u: int) -> int:
        if u < 2:
            return len(self.order)  # below every variable
        return self.table[u][0]

    def apply(self, op: str, u: int, v: int) -> int:
        if op == AND:
            if u == ZERO or v == ZERO:
                return ZERO
            if u == ONE:
                return v
            if v == ONE:
                return u
            if u == v:
                return u
        elif op == OR:
            if u == ONE or v == ONE:
                return ONE
            if u == ZERO:
                return v
            if v == ZERO:
                return u
            if u == v:
                return u
        else:  # xor
            if u == ZERO:
                return v
            if v == ZERO:
                return u
            if u == v:
                return ZERO
            if u == ONE and v == ONE:
                return ZERO

        key = (op, u, v) if u <= v else (op, v, u)
        cached = self.apply_cache.get(key)
        if cached is not None:
            return cached
        lu, lv = self.node_level(u), self.node_level(v)
        top = min(lu, lv)
        u0, u1 = (self.table[u][1], self.table[u][2]) if lu == top else (u, u)
        v0, v1 = (self.table[v][1], self.table[v][2]) if lv == top else (v, v)
        r = self.mk(top, self.apply(op, u0, v0), self.apply(op, u1, v1))
        self.apply_cache[key] = r
        return r

    def build(self, root: Node) -> int:
        memo: dict[int, int] = {}

        def rec(node: Node) -> int:
            key = id(node)
            if key in memo:
                return memo[key]
            if isinstance(node, EventNode):
                r = self.var(node.name)
            else:
                r = rec(node.children[0])
                for c in node.children[1:]:
                    r = self.apply(node.op, r, rec(c))
            memo[key] = r
            return r

        return rec(root)

    def evaluate(self, u: int, failed) -> bool:
        failed = frozenset(failed)
        while u >= 2:
            level, low, high = self.table[u]
            u = high if self.order[level] in failed else low
        return u == ONE

    def probability(self, u: int, probs: dict[str, float]) -> float:
        memo: dict[int, float] = {ZERO: 0.0, ONE: 1.0}

        def rec(n: int) -> float:
            r = memo.get(n)
            if r is None:
                level, low, high = self.table[n]
                p = probs[self.order[level]]
                r = (1.0 - p) * rec(low) + p * rec(high)
                memo[n] = r
            return r

        return rec(u)

    def any_satisfying(self, u: int) -> frozenset[str] | None:
        """Some assignment on which u evaluates true; variables off the
        chosen path are set false. Deterministic (prefers the low branch)."""
        if u == ZERO:
            return None
        failed = []
        while u >= 2:
            level, low, high = self.table[u]
            if low != ZERO:
                u = low
            else:
                failed.append(self.order[level])
                u = high
        return frozenset(failed)

    def node_count(self, u: int) -> int:
        seen = set()
        stack = [u]
        while stack:
            n = stack.pop()
            if n < 2 or n in seen:
                continue
            seen.add(n)
            stack.extend(self.table[n][1:])
        return len(seen) + (2 if u >= 2 else 1)


@dataclass(frozen=True)
class BDD:
    manager: BddManager
    root: int

    @property
    def order(self) -> tuple[str, ...]:
        return self.manager.order

    def evaluate(self, failed) -> bool:
        return self.manager.evaluate(self.root, failed)

    def probability(self, probs: dict[str, float]) -> float:
        return self.manager.probability(self.root, probs)

    @property
    def node_count(self) -> int:
        return self.manager.node_count(self.root)


def default_order(ft: FaultTree, top: str) -> tuple[str, ...]:
    """Depth-first first-occurrence order of events under the root."""
    return tuple(e.name for e in ft.cone_events(top))


def build_bdd(ft: FaultTree, top: str, order=None) -> BDD:
    root = ft.root(top)
    cone = default_order(ft, top)
    if order is None:
        order = cone
    else:
        order = tuple(order)
        if sorted(order) != sorted(cone):
            raise ModelError(
                "variable order is not a permutation of the cone's events"
            )
    mgr = BddManager(order)
    return BDD(mgr, mgr.build(root))
