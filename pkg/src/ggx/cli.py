"""Command-line interface.

Exit codes: 0 success, 1 negative finding (imperfect graph, failed witness,
failed verify suite), 2 usage or input errors, 3 exhausted caps or budgets.
Machine-readable output goes to stdout as JSON unless --dot or --csv is
given; human diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import errors
from .corpus import load_corpus
from .graphs import (
    Digraph,
    Graph,
    default_budget,
    graph_from_json,
    graph_to_json,
    graph_to_json_obj,
    to_csv,
    to_dot,
    twin_quotient,
)
from .groups import build_group, parse_group_spec, sylow_report
from .perfect import perfectness_verdict, verdict_to_json_obj, witness_check
from .powergraphs import (
    GRAPH_CAP,
    center_of_finite_component,
    class_decomposition,
    directed_power_graph,
    enhanced_power_graph,
    power_graph,
)
from .reconstruct import reconstruct_directed, reconstruct_enhanced
from .suites import SUITES, run_suite

_USAGE_ERRORS = (
    errors.SpecSyntaxError,
    errors.UnsupportedGroupError,
    errors.InvalidOrderError,
    errors.BadCayleyFileError,
    errors.BadLabelError,
    errors.BadVertexError,
    errors.PreconditionViolatedError,
    errors.CenterNotTrivialError,
    errors.UnsupportedCenterCaseError,
    errors.NotAPowerGraphError,
)
_CAP_ERRORS = (
    errors.OrderCapExceededError,
    errors.GraphCapExceededError,
    errors.ProductCapExceededError,
    errors.ClosureCapExceededError,
    errors.SizeCapExceededError,
    errors.BudgetExhaustedError,
)

_ERROR_MODULE = {
    errors.SpecSyntaxError: "groups",
    errors.UnsupportedGroupError: "groups",
    errors.InvalidOrderError: "groups",
    errors.OrderCapExceededError: "groups",
    errors.BadCayleyFileError: "groups",
    errors.ClosureCapExceededError: "groups",
    errors.BadLabelError: "groups",
    errors.BadVertexError: "graphs",
    errors.ProductCapExceededError: "graphs",
    errors.BudgetExhaustedError: "graphs",
    errors.SizeCapExceededError: "graphs",
    errors.PreconditionViolatedError: "graphs",
    errors.GraphCapExceededError: "powergraphs",
    errors.CenterNotTrivialError: "powergraphs",
    errors.UnsupportedCenterCaseError: "reconstruct",
    errors.NotAPowerGraphError: "reconstruct",
}


def export_graph(g: Graph | Digraph, fmt: str, sink) -> None:
    """Write a graph to a file object in json, dot, or csv form."""
    if fmt == "json":
        sink.write(graph_to_json(g))
    elif fmt == "dot":
        sink.write(to_dot(g))
    elif fmt == "csv":
        sink.write(to_csv(g))
    else:
        raise ValueError(f"unsupported format {fmt!r}")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out_path: str | None) -> None:
    _emit(json.dumps(obj, indent=2, sort_keys=True) + "\n", out_path)


def _format_of(args) -> str:
    if getattr(args, "dot", False):
        return "dot"
    if getattr(args, "csv", False):
        return "csv"
    return "json"


def _render_graph(g, args) -> None:
    fmt = _format_of(args)
    if fmt == "json":
        _emit(graph_to_json(g), args.out)
        return
    text = to_dot(g) if fmt == "dot" else to_csv(g)
    _emit(text, args.out)


def _budget_from(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    return default_budget()


def _cmd_group_info(args) -> int:
    g = build_group(args.spec)
    orders = g.orders()
    census: dict[int, int] = {}
    for o in orders.tolist():
        census[o] = census.get(o, 0) + 1
    rep = sylow_report(g)
    _emit_json(
        {
            "group": parse_group_spec(args.spec).render(),
            "order": g.order,
            "orderCensus": [[o, census[o]] for o in sorted(census)],
            "sylow": [
                {"prime": e.prime, "exponent": e.exponent, "unique": e.unique, "cyclic": e.cyclic}
                for e in rep.entries
            ],
        },
        getattr(args, "out", None),
    )
    return 0


def _cmd_graph_build(args) -> int:
    g = build_group(args.group)
    cap = args.cap if args.cap is not None else GRAPH_CAP
    if args.kind == "power":
        graph = power_graph(g, cap)
    elif args.kind == "dpower":
        graph = directed_power_graph(g, cap)
    else:
        graph = enhanced_power_graph(g, cap)
    _render_graph(graph, args)
    return 0


def _cmd_graph_quotient(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        g = graph_from_json(fh.read())
    if not isinstance(g, Graph):
        raise errors.BadVertexError("quotient expects an undirected graph")
    quotient, qmap = twin_quotient(g)
    if _format_of(args) != "json":
        _render_graph(quotient, args)
        return 0
    obj = graph_to_json_obj(quotient)
    obj["classes"] = [[g.labels[int(v)] for v in cls] for cls in qmap.classes]
    _emit_json(obj, args.out)
    return 0


def _cmd_classes(args) -> int:
    g = build_group(args.group)
    pg = power_graph(g)
    dec = class_decomposition(g, pg)
    center = center_of_finite_component(pg)
    obj = {
        "group": parse_group_spec(args.group).render(),
        "center": [g.labels[v] for v in center.center],
        "centerTrivial": center.trivial,
        "approxClasses": [[g.labels[v] for v in c] for c in dec.approx],
        "equivClasses": [[g.labels[v] for v in c] for c in dec.equiv],
        "types": None
        if dec.types is None
        else [
            {"kind": t.kind} if t.kind == "simple" else {"kind": t.kind, "p": t.p, "r": t.r, "s": t.s}
            for t in dec.types
        ],
    }
    _emit_json(obj, getattr(args, "out", None))
    return 0


def _cmd_reconstruct(args) -> int:
    with open(args.infile, "r", encoding="utf-8") as fh:
        g = graph_from_json(fh.read())
    if not isinstance(g, Graph):
        raise errors.NotAPowerGraphError("reconstruction expects an undirected power graph")
    result = reconstruct_enhanced(g) if args.what == "enhanced" else reconstruct_directed(g)
    _render_graph(result, args)
    return 0


def _cmd_perfect_check(args) -> int:
    g = build_group(args.group)
    cap = args.cap if args.cap is not None else GRAPH_CAP
    eg = enhanced_power_graph(g, cap)
    verdict = perfectness_verdict(eg, _budget_from(args))
    obj = verdict_to_json_obj(verdict, parse_group_spec(args.group).render(), g.labels)
    _emit_json(obj, getattr(args, "out", None))
    if verdict.status == "perfect":
        return 0
    if verdict.status == "imperfect":
        return 1
    return 3


def _cmd_witness_check(args) -> int:
    g = build_group(args.group)
    labels = [part.strip() for part in args.cycle.split(";") if part.strip()]
    ok = witness_check(g, labels, len(labels))
    _emit_json(
        {
            "group": parse_group_spec(args.group).render(),
            "cycle": labels,
            "length": len(labels),
            "induced": ok,
        },
        getattr(args, "out", None),
    )
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    corpus = load_corpus(args.corpus) if args.corpus else None
    budget = args.budget if args.budget is not None else default_budget()
    passed, results = run_suite(args.suite, corpus=corpus, budget=budget)
    for r in results:
        print(r.line(), file=sys.stderr)
    _emit_json(
        {
            "suite": args.suite,
            "passed": passed,
            "criteria": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in results],
        },
        getattr(args, "out", None),
    )
    return 0 if passed else 1


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", help="write output to this file instead of stdout")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    fmt.add_argument("--csv", action="store_true", help="emit a source,target CSV edge list")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggx",
        description="Power graphs of finite groups: build, analyze, reconstruct, verify.",
    )
    parser.add_argument("--jobs", type=int, default=None, help="cap worker count (runs sequentially)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="group-level queries")
    group_sub = p_group.add_subparsers(dest="subcommand", required=True)
    p_info = group_sub.add_parser("info", help="order, element-order census, Sylow report")
    p_info.add_argument("spec")
    p_info.add_argument("--out")
    p_info.set_defaults(fn=_cmd_group_info)

    p_graph = sub.add_parser("graph", help="graph construction and files")
    graph_sub = p_graph.add_subparsers(dest="subcommand", required=True)
    p_build = graph_sub.add_parser("build", help="build a power/dpower/enhanced graph")
    p_build.add_argument("--group", required=True)
    p_build.add_argument("--kind", required=True, choices=["power", "dpower", "enhanced"])
    p_build.add_argument("--cap", type=int, default=None, help="vertex cap override")
    _add_output_flags(p_build)
    p_build.set_defaults(fn=_cmd_graph_build)
    p_quot = graph_sub.add_parser("quotient", help="equal-closed-neighborhood quotient of a graph file")
    p_quot.add_argument("file")
    _add_output_flags(p_quot)
    p_quot.set_defaults(fn=_cmd_graph_quotient)

    p_classes = sub.add_parser("classes", help="generated-subgroup and neighborhood classes")
    p_classes.add_argument("--group", required=True)
    p_classes.add_argument("--out")
    p_classes.set_defaults(fn=_cmd_classes)

    p_rec = sub.add_parser("reconstruct", help="rebuild graphs from a power graph file")
    p_rec.add_argument("what", choices=["enhanced", "directed"])
    p_rec.add_argument("--in", dest="infile", required=True)
    _add_output_flags(p_rec)
    p_rec.set_defaults(fn=_cmd_reconstruct)

    p_perfect = sub.add_parser("perfect", help="perfectness of the enhanced power graph")
    perfect_sub = p_perfect.add_subparsers(dest="subcommand", required=True)
    p_check = perfect_sub.add_parser("check", help="run the verdict pipeline")
    p_check.add_argument("--group", required=True)
    p_check.add_argument("--budget", type=int, default=None)
    p_check.add_argument("--cap", type=int, default=None, help="graph vertex cap override")
    p_check.add_argument("--out")
    p_check.set_defaults(fn=_cmd_perfect_check)

    p_witness = sub.add_parser("witness", help="validate explicit hole witnesses")
    witness_sub = p_witness.add_subparsers(dest="subcommand", required=True)
    p_wcheck = witness_sub.add_parser("check", help="check an induced odd cycle pairwise")
    p_wcheck.add_argument("--group", required=True)
    p_wcheck.add_argument("--cycle", required=True, help='elements separated by ";"')
    p_wcheck.add_argument("--out")
    p_wcheck.set_defaults(fn=_cmd_witness_check)

    p_verify = sub.add_parser("verify", help="run an acceptance suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--corpus", default=None, help="corpus file override")
    p_verify.add_argument("--budget", type=int, default=None)
    p_verify.add_argument("--out")
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    jobs = args.jobs if args.jobs is not None else os.environ.get("GGX_JOBS")
    if jobs is not None:
        try:
            if int(jobs) < 1:
                raise ValueError
        except (TypeError, ValueError):
            print("ggx: --jobs/GGX_JOBS must be a positive integer", file=sys.stderr)
            return 2
    try:
        return args.fn(args)
    except _CAP_ERRORS as exc:
        mod = _ERROR_MODULE.get(type(exc), "ggx")
        print(f"ggx: {mod}: {exc}", file=sys.stderr)
        return 3
    except _USAGE_ERRORS as exc:
        mod = _ERROR_MODULE.get(type(exc), "ggx")
        print(f"ggx: {mod}: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"ggx: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
