import random

import pytest

from cftkit.analysis import (
    brute_force_cut_sets,
    brute_force_probability,
    check_equivalence,
    minimal_cut_sets,
    top_event_probability,
)
from cftkit.analysis.bdd import build_bdd, default_order
from cftkit.errors import (
    ModelError,
    NamespaceMismatch,
    NonCoherentTree,
    OracleLimitError,
)
from cftkit.evaluate import evaluate_scenario
from cftkit.flatten import flatten
from cftkit.tree import EventNode, FaultTree, and_, or_, xor_
from cftkit.fixtures import (
    crosslink_cft,
    crosslink_classic,
    situation_display_cft,
    situation_display_classic,
)

from generators import random_tree

TOL = 1e-12


def abc(p=0.5):
    return (EventNode(n, p) for n in "abc")


def test_and_probability():
    a, b, _ = abc(0.1)
    tree = FaultTree("T", {"top": and_(a, b)})
    r = top_event_probability(tree, "top")
    assert abs(r.exact - 0.01) <= TOL
    assert abs(brute_force_probability(tree, "top") - 0.01) <= TOL


def test_or_probability():
    a, b, _ = abc(0.1)
    tree = FaultTree("T", {"top": or_(a, b)})
    r = top_event_probability(tree, "top")
    assert abs(r.exact - 0.19) <= TOL


def test_shared_event_probability_is_exact():
    # or(and(a,b), and(a,c)) at p=0.5: exact 0.375, naive independent
    # bottom-up combination would give 0.4375
    a, b, c = abc(0.5)
    tree = FaultTree("T", {"top": or_(and_(a, b), and_(a, c))})
    r = top_event_probability(tree, "top")
    assert abs(r.exact - 0.375) <= TOL
    assert abs(brute_force_probability(tree, "top") - 0.375) <= TOL
    assert abs(r.exact - 0.4375) > 0.05


def test_single_event_identity():
    a = EventNode("a", 0.3)
    tree = FaultTree("T", {"top": or_(a, a)})
    assert abs(brute_force_probability(tree, "top") - 0.3) <= TOL


def test_rare_event_bound_dominates_exact_on_coherent_trees():
    tree = flatten(crosslink_cft())
    r = top_event_probability(tree, "loss_of_actuation")
    assert r.rare_event_upper_bound is not None
    assert r.exact <= r.rare_event_upper_bound + TOL


def test_order_independence():
    tree = flatten(crosslink_cft())
    top = "loss_of_actuation"
    fwd = build_bdd(tree, top)
    rev = build_bdd(tree, top, order=tuple(reversed(default_order(tree, top))))
    probs = {e.name: e.probability for e in tree.cone_events(top)}
    assert abs(fwd.probability(probs) - rev.probability(probs)) <= TOL


def test_missing_probability_is_an_error():
    a = EventNode("a", None)
    b = EventNode("b", 0.5)
    tree = FaultTree("T", {"top": and_(a, b)})
    with pytest.raises(ModelError):
        top_event_probability(tree, "top")
    with pytest.raises(ModelError):
        brute_force_probability(tree, "top")


def test_minimal_cut_sets_basics():
    a, b, c = abc(0.1)
    assert minimal_cut_sets(
        FaultTree("T", {"top": and_(a, b)}), "top"
    ).cut_sets == (("a", "b"),)
    a, b, c = abc(0.1)
    assert minimal_cut_sets(
        FaultTree("T", {"top": or_(a, and_(a, b))}), "top"
    ).cut_sets == (("a",),)
    a, b, c = abc(0.1)
    assert minimal_cut_sets(
        FaultTree("T", {"top": and_(a, or_(b, c))}), "top"
    ).cut_sets == (("a", "b"), ("a", "c"))


def test_brute_force_cut_sets_basics():
    a, b, c = abc(0.1)
    assert brute_force_cut_sets(
        FaultTree("T", {"top": or_(a, b)}), "top"
    ).cut_sets == (("a",), ("b",))
    a, b, c = abc(0.1)
    assert brute_force_cut_sets(
        FaultTree("T", {"top": and_(a, or_(b, c))}), "top"
    ).cut_sets == (("a", "b"), ("a", "c"))


def test_crosslink_cut_sets_match_oracle_and_paper_claims():
    tree = flatten(crosslink_cft())
    mcs = minimal_cut_sets(tree, "loss_of_actuation")
    oracle = brute_force_cut_sets(tree, "loss_of_actuation")
    assert mcs == oracle
    sets = {frozenset(cs) for cs in mcs.cut_sets}
    assert frozenset({"comm_A.comm_fail", "comm_B.comm_fail"}) in sets
    assert frozenset({"sw_A.sw_fail", "sw_B.sw_fail"}) in sets
    assert (
        frozenset({"ecu_A.fail", "ccu_A.fail", "ecu_B.fail", "ccu_B.fail"})
        in sets
    )
    # single-fault tolerant: no singleton cut set
    assert all(len(cs) > 1 for cs in mcs.cut_sets)


def test_cut_set_soundness_and_minimality():
    tree = flatten(crosslink_cft())
    top = "loss_of_actuation"
    for cs in minimal_cut_sets(tree, top).cut_sets:
        assert evaluate_scenario(tree, cs, top) is True
        for dropped in cs:
            reduced = set(cs) - {dropped}
            assert evaluate_scenario(tree, reduced, top) is False


def test_xor_rejected_by_cut_sets_accepted_by_probability():
    a, b, _ = abc(0.1)
    tree = FaultTree("T", {"top": xor_(a, b)})
    with pytest.raises(NonCoherentTree):
        minimal_cut_sets(tree, "top")
    with pytest.raises(NonCoherentTree):
        brute_force_cut_sets(tree, "top")
    r = top_event_probability(tree, "top")
    assert abs(r.exact - 0.18) <= TOL
    assert r.rare_event_upper_bound is None


def test_oracle_refuses_oversized_cones():
    events = [EventNode(f"e{i:02d}", 0.1) for i in range(25)]
    tree = FaultTree("T", {"top": or_(*events)})
    with pytest.raises(OracleLimitError):
        brute_force_probability(tree, "top")
    with pytest.raises(OracleLimitError):
        brute_force_cut_sets(tree, "top")


def test_oracle_agreement_on_random_coherent_trees():
    rng = random.Random(2024)
    for _ in range(200):
        tree = random_tree(rng, max_events=10, max_depth=5)
        exact = top_event_probability(tree, "top").exact
        assert abs(exact - brute_force_probability(tree, "top")) <= TOL
        assert minimal_cut_sets(tree, "top") == brute_force_cut_sets(tree, "top")


def test_probability_monotone_in_event_probability():
    rng = random.Random(5)
    for _ in range(30):
        tree = random_tree(rng, max_events=6)
        base = top_event_probability(tree, "top").exact
        bumped_name = rng.choice(tree.event_names)
        node = tree.event_node(bumped_name)
        old = node.probability
        node.probability = min(1.0, old + 0.3)
        try:
            assert top_event_probability(tree, "top").exact >= base - TOL
        finally:
            node.probability = old


def test_equivalence_of_fixture_pairs():
    cl_flat = flatten(crosslink_cft())
    verdict = check_equivalence(
        cl_flat, crosslink_classic(), "loss_of_actuation", "loss_of_actuation"
    )
    assert verdict.equivalent and verdict.witness is None

    sd_flat = flatten(situation_display_cft())
    classic = situation_display_classic()
    for top in ("Lo", "pLo", "Err"):
        assert check_equivalence(sd_flat, classic, top, top).equivalent


def test_inequivalence_yields_checkable_witness():
    a, b = EventNode("a", 0.1), EventNode("b", 0.1)
    t1 = FaultTree("T1", {"top": or_(a, b)})
    a2, b2 = EventNode("a", 0.1), EventNode("b", 0.1)
    t2 = FaultTree("T2", {"top": xor_(a2, b2)})
    verdict = check_equivalence(t1, t2, "top", "top")
    assert not verdict.equivalent
    w = verdict.witness
    assert w is not None
    assert set(w.failed) == {"a", "b"}
    assert (w.left, w.right) == (True, False)
    assert evaluate_scenario(t1, w.failed, "top") == w.left
    assert evaluate_scenario(t2, w.failed, "top") == w.right


def test_namespace_mismatch_is_an_error():
    a, b = EventNode("a", 0.1), EventNode("b", 0.1)
    t1 = FaultTree("T1", {"top": or_(a, b)})
    a2, c2 = EventNode("a", 0.1), EventNode("c", 0.1)
    t2 = FaultTree("T2", {"top": or_(a2, c2)})
    with pytest.raises(NamespaceMismatch) as exc:
        check_equivalence(t1, t2, "top", "top")
    assert exc.value.only_left == ("b",)
    assert exc.value.only_right == ("c",)
