import itertools
import random

import pytest

from cftkit.analysis.bdd import BddManager, build_bdd
from cftkit.analysis.oracle import truth_table
from cftkit.errors import ModelError
from cftkit.tree import EventNode, FaultTree, and_, or_, xor_
from cftkit.fixtures import crosslink_cft
from cftkit.flatten import flatten

from generators import all_scenarios, random_tree


def small_tree():
    a, b = EventNode("a", 0.1), EventNode("b", 0.2)
    return FaultTree("T", {"top": and_(a, b)}), ("a", "b")


def test_and_bdd_function():
    tree, names = small_tree()
    bdd = build_bdd(tree, "top")
    for fa, fb in itertools.product((False, True), repeat=2):
        failed = {n for n, f in zip(names, (fa, fb)) if f}
        assert bdd.evaluate(failed) == (fa and fb)


def test_absorption_collapses_to_single_variable():
    a, b = EventNode("a", 0.1), EventNode("b", 0.2)
    tree = FaultTree("T", {"top": or_(a, and_(a, b))})
    bdd = build_bdd(tree, "top")
    assert bdd.root == bdd.manager.var("a")


def test_bdd_is_reduced_and_ordered():
    tree = flatten(crosslink_cft())
    bdd = build_bdd(tree, "loss_of_actuation")
    mgr = bdd.manager
    for i, entry in enumerate(mgr.table):
        if entry is None:
            continue
        level, low, high = entry
        assert low != high  # reduced
        assert mgr.node_level(low) > level  # ordered
        assert mgr.node_level(high) > level
    # uniqueness of (var, low, high) triples
    assert len(mgr.unique) == len(mgr.table) - 2


def test_crosslink_bdd_agrees_with_exhaustive_evaluation():
    tree = flatten(crosslink_cft())
    bdd = build_bdd(tree, "loss_of_actuation")
    table, names = truth_table(tree, "loss_of_actuation", order=bdd.order)
    for a in range(1 << len(names)):
        failed = {names[i] for i in range(len(names)) if (a >> i) & 1}
        assert bdd.evaluate(failed) == bool((table >> a) & 1)


def test_custom_order_must_be_permutation():
    tree, _ = small_tree()
    with pytest.raises(ModelError):
        build_bdd(tree, "top", order=("a",))
    with pytest.raises(ModelError):
        build_bdd(tree, "top", order=("a", "b", "c"))


def test_unknown_top_event():
    tree, _ = small_tree()
    with pytest.raises(ModelError):
        build_bdd(tree, "nope")


def test_canonicity_equal_function_equal_root():
    # same function built from different structures, one shared manager
    a, b, c = (EventNode(n, 0.1) for n in "abc")
    t1 = FaultTree("T1", {"top": or_(and_(a, b), and_(a, c))})
    a2, b2, c2 = (EventNode(n, 0.1) for n in "abc")
    t2 = FaultTree("T2", {"top": and_(a2, or_(b2, c2))})
    mgr = BddManager(("a", "b", "c"))
    assert mgr.build(t1.root("top")) == mgr.build(t2.root("top"))


def test_canonicity_different_function_different_root():
    a, b = EventNode("a", 0.1), EventNode("b", 0.1)
    t1 = FaultTree("T1", {"top": or_(a, b)})
    a2, b2 = EventNode("a", 0.1), EventNode("b", 0.1)
    t2 = FaultTree("T2", {"top": xor_(a2, b2)})
    mgr = BddManager(("a", "b"))
    assert mgr.build(t1.root("top")) != mgr.build(t2.root("top"))


def test_random_trees_bdd_matches_truth_table():
    rng = random.Random(42)
    for _ in range(50):
        tree = random_tree(rng, max_events=7, allow_xor=True)
        bdd = build_bdd(tree, "top")
        table, names = truth_table(tree, "top", order=bdd.order)
        for failed in all_scenarios(names):
            a = sum(1 << i for i, n in enumerate(names) if n in failed)
            assert bdd.evaluate(failed) == bool((table >> a) & 1)
