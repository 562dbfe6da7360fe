"""Command-line front-end.

Exit codes: 0 on success, 1 on analysis-level findings (inequivalence,
validation reports requested as analysis), 2 on usage, parse, or
validation errors. Machine output goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    brute_force_cut_sets,
    check_equivalence,
    minimal_cut_sets,
    top_event_probability,
)
from .dsl import (
    export_dot,
    export_results_json,
    export_tree_json,
    parse_model,
    serialize_model,
    tree_to_decl,
)
from .dsl.source import SourceModel
from .errors import CftError, ModelError, NamespaceMismatch, ParseError
from .evaluate import evaluate_scenario
from .flatten import flatten
from .metrics import model_metrics
from .dsl.serializer import format_probability
from . import fixtures as fixture_mod
from .validate import validate_definition, validate_system

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_ERROR = 2


class _UsageError(Exception):
    pass


def _load(path: str) -> SourceModel:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_model(text)


def _resolve_tree(source: SourceModel, system: str | None, tree: str | None):
    """A FaultTree from either a system (flattened) or a tree block."""
    if (system is None) == (tree is None):
        raise _UsageError("give exactly one of --system or --tree")
    if system is not None:
        return flatten(source.system(system))
    return source.tree(tree)


def _cmd_validate(args) -> int:
    source = _load(args.file)
    code = EXIT_OK
    for comp in source.components():
        report = validate_definition(comp)
        for line in report.lines():
            print(line)
        if not report.ok:
            code = EXIT_ERROR
    for name in source.system_names():
        report = validate_system(source.system(name))
        for line in report.lines():
            print(line)
        if not report.ok:
            code = EXIT_ERROR
    for name in source.tree_names():
        source.tree(name)  # raises ModelError on bad references
    if code == EXIT_OK:
        print("ok")
    return code


def _cmd_flatten(args) -> int:
    source = _load(args.file)
    tree = flatten(source.system(args.system))
    tops = (args.top,) if args.top else None
    if args.format == "dot":
        if args.top is None:
            if len(tree.top_names) != 1:
                raise _UsageError("--format dot needs --top")
            tops = tree.top_names
        print(export_dot(tree, tops[0]), end="")
    elif args.format == "json":
        print(export_tree_json(tree, tops))
    else:
        decl = tree_to_decl(tree, tops)
        print(serialize_model(SourceModel((decl,))), end="")
    return EXIT_OK


def _cmd_cutsets(args) -> int:
    source = _load(args.file)
    tree = _resolve_tree(source, args.system, args.tree)
    report = (
        brute_force_cut_sets(tree, args.top)
        if args.oracle
        else minimal_cut_sets(tree, args.top)
    )
    if args.format == "json":
        print(export_results_json([report]))
    else:
        for cs in report.cut_sets:
            print("{" + ", ".join(cs) + "}")
    return EXIT_OK


def _cmd_prob(args) -> int:
    source = _load(args.file)
    tree = _resolve_tree(source, args.system, args.tree)
    result = top_event_probability(tree, args.top)
    if args.format == "json":
        print(export_results_json([result]))
    else:
        print(f"exact {format_probability(result.exact)}")
        if result.rare_event_upper_bound is not None:
            print(
                "rare_event_upper_bound "
                f"{format_probability(result.rare_event_upper_bound)}"
            )
    return EXIT_OK


def _parse_selector(source: SourceModel, selector: str):
    """'flatten(<System>).<top>' or '<Tree or System>.<top>' -> (tree, top)."""
    if selector.startswith("flatten("):
        close = selector.find(")")
        if close < 0 or not selector.startswith(").", close):
            raise _UsageError(
                f"bad selector {selector!r}; "
                "expected flatten(<System>).<top> or <Tree>.<top>"
            )
        return (
            flatten(source.system(selector[len("flatten(") : close])),
            selector[close + 2 :],
        )
    name, sep, top = selector.partition(".")
    if not sep:
        raise _UsageError(f"bad selector {selector!r}; missing '.<top>'")
    if name in source.tree_names():
        return source.tree(name), top
    if name in source.system_names():
        return flatten(source.system(name)), top
    raise _UsageError(f"no system or tree named {name!r}")


def _cmd_equiv(args) -> int:
    source = _load(args.file)
    left_tree, left_top = _parse_selector(source, args.left)
    right_tree, right_top = _parse_selector(source, args.right)
    verdict = check_equivalence(left_tree, right_tree, left_top, right_top)
    if args.format == "json":
        print(export_results_json([verdict]))
    elif verdict.equivalent:
        print("equivalent")
    else:
        w = verdict.witness
        print("not equivalent")
        print(f"witness failed={{{', '.join(w.failed)}}}")
        print(f"left={str(w.left).lower()} right={str(w.right).lower()}")
    return EXIT_OK if verdict.equivalent else EXIT_FINDING


def _cmd_eval(args) -> int:
    source = _load(args.file)
    system = source.system(args.system)
    failed = [e for e in args.failed.split(",") if e] if args.failed else []
    value = evaluate_scenario(system, failed, args.top)
    print(str(value).lower())
    return EXIT_OK


def _cmd_metrics(args) -> int:
    source = _load(args.file)
    report = model_metrics(source.system(args.system))
    if args.format == "json":
        print(export_results_json([report]))
        return EXIT_OK
    print(f"system {report.system}")
    print(f"instances {report.instance_count}")
    print(f"top_events {report.top_event_count}")
    print(f"flattened_nodes {report.flattened_node_count}")
    print(f"flattened_depth {report.flattened_depth}")
    print(f"shared_nodes {report.shared_node_count}")
    for d in report.definitions:
        print(
            f"definition {d.name}: ports={d.port_count} "
            f"input_modes={d.input_mode_count} "
            f"output_modes={d.output_mode_count} events={d.event_count} "
            f"gates={d.gate_count} reuse={report.reuse.get(d.name, 0)}"
        )
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    if args.emit is None:
        for name, entry in fixture_mod.FIXTURES.items():
            print(f"{name}: system {entry['system']}, tree {entry['classic']}")
        return EXIT_OK
    out = Path(args.emit)
    out.mkdir(parents=True, exist_ok=True)
    for name, entry in fixture_mod.FIXTURES.items():
        path = out / entry["file"]
        path.write_text(fixture_mod.fixture_source(name), encoding="utf-8")
        print(str(path))
    catalog = out / "scenarios.json"
    catalog.write_text(
        Path(__file__).parent.joinpath("fixtures", "data", "scenarios.json")
        .read_text(encoding="utf-8"),
        encoding="utf-8",
    )
    print(str(catalog))
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cft",
        description="Component fault tree modeling and analysis toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate all declarations in a file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("flatten", help="flatten a system to a classic tree")
    p.add_argument("file")
    p.add_argument("--system", required=True)
    p.add_argument("--top")
    p.add_argument("--format", choices=("dsl", "dot", "json"), default="dsl")
    p.set_defaults(func=_cmd_flatten)

    p = sub.add_parser("cutsets", help="minimal cut sets of a top event")
    p.add_argument("file")
    p.add_argument("--system")
    p.add_argument("--tree")
    p.add_argument("--top", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the brute-force enumeration oracle instead",
    )
    p.set_defaults(func=_cmd_cutsets)

    p = sub.add_parser("prob", help="exact top-event probability")
    p.add_argument("file")
    p.add_argument("--system")
    p.add_argument("--tree")
    p.add_argument("--top", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_prob)

    p = sub.add_parser("equiv", help="check logical equivalence of two trees")
    p.add_argument("file")
    p.add_argument("--left", required=True, metavar="SELECTOR")
    p.add_argument("--right", required=True, metavar="SELECTOR")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("eval", help="evaluate a failure scenario")
    p.add_argument("file")
    p.add_argument("--system", required=True)
    p.add_argument("--top", required=True)
    p.add_argument("--failed", default="", metavar="e1,e2,...")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("metrics", help="structural model metrics")
    p.add_argument("file")
    p.add_argument("--system", required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("fixtures", help="list or emit the bundled fixtures")
    p.add_argument("--emit", metavar="DIR")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (ModelError, NamespaceMismatch, CftError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ModelError) and exc.report is not None:
            for line in exc.report.lines():
                print(line, file=sys.stderr)
        return EXIT_ERROR


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
