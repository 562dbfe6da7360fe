"""The shipped case studies: files, builders, and the scenario catalog."""

from cftkit.dsl import export_dot, parse_model
from cftkit.evaluate import evaluate_scenario
from cftkit.flatten import flatten
from cftkit.model import Gate
from cftkit.tree import depth
from cftkit.fixtures import FIXTURES, fixture_source, scenario_catalog


def test_registry_is_complete():
    assert set(FIXTURES) == {"situation_display", "crosslink"}
    for entry in FIXTURES.values():
        assert callable(entry["build_system"])
        assert callable(entry["build_classic"])


def test_files_agree_with_builders():
    for entry in FIXTURES.values():
        m = parse_model(fixture_source_name(entry))
        assert m.system(entry["system"]) == entry["build_system"]()
        parsed_classic = m.tree(entry["classic"])
        built_classic = entry["build_classic"]()
        assert parsed_classic.top_names == built_classic.top_names
        for top in built_classic.top_names:
            assert export_dot(parsed_classic, top) == export_dot(
                built_classic, top
            )


def fixture_source_name(entry):
    for name, e in FIXTURES.items():
        if e is entry:
            return fixture_source(name)
    raise KeyError(entry)


def test_scenario_catalog_runs_on_system_flattened_and_classic():
    catalog = scenario_catalog()
    assert {f["fixture"] for f in catalog["fixtures"]} == set(FIXTURES)
    for block in catalog["fixtures"]:
        entry = FIXTURES[block["fixture"]]
        system = entry["build_system"]()
        flat = flatten(system)
        classic = entry["build_classic"]()
        assert block["model"] == system.name
        assert block["scenarios"], "catalog block must not be empty"
        names = {n for n, _ in system.qualified_events()}
        for sc in block["scenarios"]:
            assert sc["provenance"] in ("paper", "derived", "trivial")
            assert set(sc["failed"]) <= names
            for model in (system, flat, classic):
                assert (
                    evaluate_scenario(model, sc["failed"], sc["top"])
                    is sc["expected"]
                ), (block["fixture"], sc)


def test_catalog_includes_paper_scenarios():
    catalog = scenario_catalog()
    provs = [
        sc["provenance"]
        for block in catalog["fixtures"]
        for sc in block["scenarios"]
    ]
    assert "paper" in provs


def test_lo_demands_both_sources_while_plo_accepts_either():
    proc = FIXTURES["situation_display"]["build_system"]().definition(
        "Processing"
    )
    lo = proc.output_expr("o", "lo")
    plo = proc.output_expr("o", "plo")

    def leaves(expr):
        if not isinstance(expr, Gate):
            return [expr]
        return [l for a in expr.args for l in leaves(a)]

    # same inputs feed both modes; only the combination differs
    assert set(leaves(lo)) == set(leaves(plo))
    # guaranteed loss: both external sources down, or processing itself
    assert lo.op == "or"
    assert sorted(
        a.op if isinstance(a, Gate) else "leaf" for a in lo.args
    ) == ["and", "leaf"]
    # potential loss: any contributor suffices
    assert plo.op == "or"
    assert all(not isinstance(a, Gate) for a in plo.args)


def test_err_logic_is_a_pure_disjunction():
    flat = flatten(FIXTURES["situation_display"]["build_system"]())
    root = flat.root("Err")
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Gate) or hasattr(node, "op"):
            assert node.op == "or"
            stack.extend(node.children)


def test_classic_trees_are_nontrivially_nested():
    for entry in FIXTURES.values():
        classic = entry["build_classic"]()
        assert max(depth(classic.root(t)) for t in classic.top_names) >= 4
