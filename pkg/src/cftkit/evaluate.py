"""Scenario evaluation for both system compositions and fault trees.

Evaluation on a SystemModel walks the failure-propagation network
directly, without building the flattened tree, so it serves as the
independent counterpart of evaluating the flattening.
"""

from __future__ import annotations

from .errors import ModelError
from .model import AND, OR, EventRef, Gate, PortRef, SystemModel
from .tree import FaultTree, evaluate_node


def evaluate_scenario(model, failed, top: str) -> bool:
    """Truth value of the named top event with the given events failed."""
    failed = frozenset(failed)
    if isinstance(model, FaultTree):
        return _evaluate_tree(model, failed, top)
    if isinstance(model, SystemModel):
        return _evaluate_system(model, failed, top)
    raise TypeError(f"cannot evaluate a {type(model).__name__}")


def _evaluate_tree(tree: FaultTree, failed: frozenset[str], top: str) -> bool:
    known = set(tree.event_names)
    for name in failed:
        if name not in known:
            raise ModelError(f"unknown basic event {name!r}")
    return evaluate_node(tree.root(top), failed)


def _evaluate_system(sys: SystemModel, failed: frozenset[str], top: str) -> bool:
    known = {name for name, _ in sys.qualified_events()}
    for name in failed:
        if name not in known:
            raise ModelError(f"unknown basic event {name!r}")
    t = sys.top_event(top)
    if t is None:
        raise ModelError(f"unknown top event {top!r}")

    memo: dict[tuple[str, str, str], bool] = {}

    def eval_expr(instance: str, expr) -> bool:
        if isinstance(expr, EventRef):
            return f"{instance}.{expr.name}" in failed
        if isinstance(expr, PortRef):
            src = sys.driver(instance, expr.port)
            return eval_output(src.instance, src.port, expr.mode)
        if isinstance(expr, Gate):
            if expr.op == AND:
                return all(eval_expr(instance, a) for a in expr.args)
            if expr.op == OR:
                return any(eval_expr(instance, a) for a in expr.args)
            return eval_expr(instance, expr.args[0]) != eval_expr(
                instance, expr.args[1]
            )
        raise TypeError(f"bad expression node {expr!r}")

    def eval_output(instance: str, port: str, mode: str) -> bool:
        key = (instance, port, mode)
        if key not in memo:
            defn = sys.instance_definition(instance)
            memo[key] = eval_expr(instance, defn.output_expr(port, mode))
        return memo[key]

    return eval_output(t.instance, t.port, t.mode)
