"""Classic fault trees: rooted Boolean DAGs over qualified basic events.

Nodes compare by identity, not structure: shared subtrees are represented
by sharing the node object itself. The fan-out guarantees of flattening
("expanded exactly once") therefore survive as checkable facts.
"""

from __future__ import annotations

from .errors import ModelError
from .model import AND, GATE_OPS, OR, XOR


class Node:
    __slots__ = ()


class EventNode(Node):
    __slots__ = ("name", "probability")

    def __init__(self, name: str, probability: float | None = None):
        self.name = name
        self.probability = probability

    def __repr__(self):
        return f"EventNode({self.name!r}, p={self.probability!r})"


class GateNode(Node):
    __slots__ = ("op", "children", "origin")

    def __init__(self, op: str, children, origin: str | None = None):
        if op not in GATE_OPS:
            raise ValueError(f"unknown gate operator {op!r}")
        children = tuple(children)
        if op == XOR and len(children) != 2:
            raise ValueError("xor takes exactly 2 children")
        if len(children) < 2:
            raise ValueError(f"{op} takes at least 2 children")
        self.op = op
        self.children = children
        self.origin = origin  # instance that contributed this gate, if flattened

    def __repr__(self):
        return f"GateNode({self.op!r}, {len(self.children)} children)"


def event(name: str, probability: float | None = None) -> EventNode:
    return EventNode(name, probability)


def and_(*children) -> GateNode:
    return GateNode(AND, children)


def or_(*children) -> GateNode:
    return GateNode(OR, children)


def xor_(a, b) -> GateNode:
    return GateNode(XOR, (a, b))


class FaultTree:
    """A set of named roots over a shared DAG of gate and event nodes."""

    def __init__(self, name: str, roots: dict[str, Node]):
        self.name = name
        self._roots = dict(roots)
        self._events: dict[str, EventNode] = {}
        seen_objects: set[int] = set()
        for root in self._roots.values():
            for node in iter_nodes(root):
                if id(node) in seen_objects:
                    continue
                seen_objects.add(id(node))
                if isinstance(node, EventNode):
                    prev = self._events.get(node.name)
                    if prev is not None and prev is not node:
                        raise ModelError(
                            f"duplicate basic-event name {node.name!r} "
                            "on distinct nodes"
                        )
                    self._events[node.name] = node

    @property
    def top_names(self) -> tuple[str, ...]:
        return tuple(self._roots)

    def root(self, top: str) -> Node:
        try:
            return self._roots[top]
        except KeyError:
            raise ModelError(f"unknown top event {top!r}") from None

    @property
    def roots(self) -> dict[str, Node]:
        return dict(self._roots)

    def event_node(self, name: str) -> EventNode:
        try:
            return self._events[name]
        except KeyError:
            raise ModelError(f"unknown basic event {name!r}") from None

    @property
    def event_names(self) -> tuple[str, ...]:
        return tuple(self._events)

    def cone_events(self, top: str) -> tuple[EventNode, ...]:
        """Events reachable from the given root, first-occurrence DFS order."""
        out = []
        for node in iter_nodes(self.root(top)):
            if isinstance(node, EventNode):
                out.append(node)
        return tuple(out)


def iter_nodes(root: Node):
    """Depth-first preorder over distinct nodes, children in order."""
    seen: set[int] = set()
    stack = [root]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        if isinstance(node, GateNode):
            stack.extend(reversed(node.children))


def node_count(root: Node) -> int:
    return sum(1 for _ in iter_nodes(root))


def depth(root: Node) -> int:
    """Longest root-to-leaf path, counted in edges."""
    memo: dict[int, int] = {}

    def rec(node: Node) -> int:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, EventNode):
            d = 0
        else:
            d = 1 + max(rec(c) for c in node.children)
        memo[key] = d
        return d

    return rec(root)


def has_xor(root: Node) -> bool:
    return any(
        isinstance(n, GateNode) and n.op == XOR for n in iter_nodes(root)
    )


def evaluate_node(root: Node, failed: frozenset[str] | set[str]) -> bool:
    memo: dict[int, bool] = {}

    def rec(node: Node) -> bool:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, EventNode):
            v = node.name in failed
        elif node.op == AND:
            v = all(rec(c) for c in node.children)
        elif node.op == OR:
            v = any(rec(c) for c in node.children)
        else:  # xor
            v = rec(node.children[0]) != rec(node.children[1])
        memo[key] = v
        return v

    return rec(root)
