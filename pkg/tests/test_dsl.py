import random

import pytest

from cftkit.dsl import parse_model, serialize_model, tree_to_decl
from cftkit.dsl.source import SourceModel, SystemDecl
from cftkit.errors import ParseError
from cftkit.model import AND, OR, XOR, EventRef, Gate, PortRef
from cftkit.fixtures import (
    FIXTURES,
    crosslink_cft,
    fixture_source,
    situation_display_cft,
)

from generators import random_system, random_tree

SMALL = """
# a two-part model
component Lamp {
  in i: loss
  out o: dark
  event bulb p=0.01
  o.dark = bulb | i.loss
}

system Desk {
  inst l1: Lamp
  inst l2: Lamp
  connect l1.o -> l2.i   # chained, just for the syntax
  top l2.o.dark as "dark"
}
"""


def test_small_model_parses():
    m = parse_model(SMALL)
    (lamp,) = m.components()
    assert lamp.name == "Lamp"
    assert lamp.events[0].probability == 0.01
    assert m.system_names() == ("Desk",)
    sys = m.system("Desk")
    assert [i.name for i in sys.instances] == ["l1", "l2"]
    assert sys.top_events[0].name == "dark"


def test_operator_precedence():
    m = parse_model(
        "tree T {\n"
        "  event a p=0.1\n  event b p=0.1\n  event c p=0.1\n"
        "  event d p=0.1\n  event e p=0.1\n"
        "  root = a | b & c ^ d & e\n"
        "  top root as \"t\"\n"
        "}\n"
    )
    expr = dict(m.declarations[0].nodes)["root"]
    # & binds tightest, then ^, then |
    assert expr == Gate(
        OR,
        (
            EventRef("a"),
            Gate(
                XOR,
                (
                    Gate(AND, (EventRef("b"), EventRef("c"))),
                    Gate(AND, (EventRef("d"), EventRef("e"))),
                ),
            ),
        ),
    )


def test_xor_chain_is_left_associative():
    m = parse_model(
        "tree T {\n"
        "  event a p=0.1\n  event b p=0.1\n  event c p=0.1\n"
        "  root = a ^ b ^ c\n"
        "  top root as \"t\"\n"
        "}\n"
    )
    expr = dict(m.declarations[0].nodes)["root"]
    assert expr == Gate(
        XOR, (Gate(XOR, (EventRef("a"), EventRef("b"))), EventRef("c"))
    )


def test_parentheses_override_precedence():
    m = parse_model(
        "component C {\n"
        "  in i: f\n  out o: f\n"
        "  event e p=0.5\n"
        "  o.f = (e | i.f) & e\n"
        "}\n"
    )
    expr = m.components()[0].outputs[0].expr
    assert expr == Gate(
        AND, (Gate(OR, (EventRef("e"), PortRef("i", "f"))), EventRef("e"))
    )


def test_probability_out_of_range_reports_position():
    text = "component C {\n  out o: f\n  event e p=1.5\n  o.f = e\n}\n"
    with pytest.raises(ParseError) as exc:
        parse_model(text)
    assert exc.value.line == 3
    assert exc.value.col == 13
    assert "outside [0, 1]" in str(exc.value)


def test_syntax_errors_carry_line_and_col():
    with pytest.raises(ParseError) as exc:
        parse_model("component C {\n  out o: f\n  o.f = $\n}\n")
    assert (exc.value.line, exc.value.col) == (3, 9)

    with pytest.raises(ParseError) as exc:
        parse_model('system S {\n  top a.b.c as "unterminated\n}\n')
    assert exc.value.line == 2

    with pytest.raises(ParseError):
        parse_model("component C {\n  out o: f\n  o.f = e\n")  # missing }


def test_duplicate_declaration_rejected():
    with pytest.raises(ParseError):
        parse_model("tree T {\n  event a p=0.1\n  r = a | a\n}\n" * 2)


def test_tree_node_references_and_cycle_detection():
    m = parse_model(
        "tree T {\n"
        "  event a p=0.1\n  event b p=0.2\n"
        "  mid = a & b\n"
        "  root = mid | b\n"
        "  top root as \"t\"\n"
        "}\n"
    )
    tree = m.tree("T")
    assert tree.top_names == ("t",)
    assert sorted(tree.event_names) == ["a", "b"]

    from cftkit.errors import ModelError

    cyclic = parse_model(
        "tree T {\n"
        "  event a p=0.1\n"
        "  x = y | a\n"
        "  y = x | a\n"
        "  top x as \"t\"\n"
        "}\n"
    )
    with pytest.raises(ModelError):
        cyclic.tree("T")


def test_dotted_event_names_allowed_in_tree_blocks():
    m = parse_model(
        "tree T {\n"
        "  event u.e p=0.25\n"
        "  event v.e p=0.25\n"
        "  root = u.e & v.e\n"
        "  top root as \"t\"\n"
        "}\n"
    )
    assert sorted(m.tree("T").event_names) == ["u.e", "v.e"]


def test_empty_model_round_trips_to_empty_string():
    assert serialize_model(SourceModel(())) == ""
    assert parse_model("") == SourceModel(())
    assert parse_model("# only a comment\n") == SourceModel(())


def test_fixture_files_round_trip():
    for name in FIXTURES:
        text = fixture_source(name)
        m = parse_model(text)
        assert parse_model(serialize_model(m)) == m


def test_fixture_files_are_canonical_up_to_comments():
    # apart from the header comments, the shipped files are exactly what
    # the serializer would emit; serialization is idempotent
    for name in FIXTURES:
        text = fixture_source(name)
        body = "\n".join(
            l for l in text.split("\n") if not l.lstrip().startswith("#")
        ).lstrip("\n")
        canonical = serialize_model(parse_model(text))
        assert canonical == body
        assert serialize_model(parse_model(canonical)) == canonical


def test_parsed_fixture_systems_match_builders():
    sd = parse_model(fixture_source("situation_display"))
    assert sd.system(sd.system_names()[0]) == situation_display_cft()
    cl = parse_model(fixture_source("crosslink"))
    assert cl.system(cl.system_names()[0]) == crosslink_cft()


def test_random_models_round_trip():
    rng = random.Random(31)
    for _ in range(100):
        sys = random_system(rng, max_events=10, allow_xor=True)
        decls = sys.definitions + (
            SystemDecl(sys.name, sys.instances, sys.connections, sys.top_events),
        )
        if rng.random() < 0.5:
            decls += (tree_to_decl(random_tree(rng, allow_xor=True)),)
        m = SourceModel(decls)
        assert parse_model(serialize_model(m)) == m


def test_fuzzed_inputs_never_crash():
    rng = random.Random(1234)
    base = fixture_source("crosslink") + fixture_source("situation_display")
    alphabet = "abcz019._|&^(){}=:->\"# \n\tcomponent"
    for _ in range(10_000):
        text = list(base[: rng.randint(0, len(base))])
        for _ in range(rng.randint(1, 6)):
            kind = rng.random()
            pos = rng.randint(0, len(text)) if text else 0
            if kind < 0.4 and text:
                text[rng.randrange(len(text))] = rng.choice(alphabet)
            elif kind < 0.8:
                text.insert(pos, rng.choice(alphabet))
            elif text:
                del text[rng.randrange(len(text))]
        try:
            parse_model("".join(text))
        except ParseError:
            pass  # the only acceptable failure mode
