"""Command-line surface: build graphs, check properties, verify theorems,
ingest Cayley-table files.

Exit codes: 0 success, 1 theorem counterexample (or an unexpectedly empty
iff-check roster), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import analysis
from .cayley_io import ingest_cayley
from .epg import build_bundle
from .errors import GroupError
from .groups import DEFAULT_MAX_ORDER
from .simplegraph import SimpleGraph, to_dot, to_edgelist_lines, to_json
from .specs import parse_spec
from .theorems import CHECKS, CHECKS_BY_ID, BundleCache, roster_generate, run_check

ENV_MAX_ORDER = "EPG_MAX_ORDER"
FORMATS = ("json", "dot", "edgelist", "text")


def _default_cap() -> int:
    raw = os.environ.get(ENV_MAX_ORDER)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        return int(raw)
    except ValueError:
        raise GroupError(f"{ENV_MAX_ORDER} must be an integer, got {raw!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="epgraph",
        description="Enhanced power graphs of finite groups: build, check, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--max-order", type=int, default=None,
                       help="cap on group order (default: EPG_MAX_ORDER or 512)")
        p.add_argument("--validate", choices=("full", "sampled", "off"), default=None,
                       help="group-law validation level (default: auto)")
        p.add_argument("--output", type=Path, default=None,
                       help="write output to this file instead of stdout")

    p_build = sub.add_parser("build", help="emit a group's enhanced power graph")
    p_build.add_argument("--group", required=True, help="group spec, e.g. cyclic:6")
    p_build.add_argument("--deleted", action="store_true",
                         help="emit the graph with the identity vertex removed")
    p_build.add_argument("--format", choices=FORMATS, default="text")
    common(p_build)

    p_check = sub.add_parser("check", help="report graph properties as JSON")
    p_check.add_argument("--group", required=True, help="group spec, e.g. dicyclic:2")
    p_check.add_argument("--deleted", action="store_true",
                         help="analyze the identity-deleted graph")
    p_check.add_argument("--props", default=None,
                         help="comma-separated property names (default: all)")
    common(p_check)

    p_verify = sub.add_parser("verify", help="run theorem checks over a roster")
    p_verify.add_argument("--theorem", required=True,
                          help="check id like T2.4, a comma-separated list, or 'all'")
    p_verify.add_argument("--max-order", type=int, default=32, dest="roster_max",
                          help="roster order bound (default 32)")
    p_verify.add_argument("--validate", choices=("full", "sampled", "off"), default=None)
    p_verify.add_argument("--output", type=Path, default=None)

    p_ingest = sub.add_parser("ingest", help="validate a Cayley file and report properties")
    p_ingest.add_argument("path", type=Path, help="Cayley table file")
    p_ingest.add_argument("--deleted", action="store_true")
    p_ingest.add_argument("--props", default=None)
    common(p_ingest)

    return parser


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _render_graph(graph: SimpleGraph, fmt: str) -> str:
    if fmt == "edgelist":
        lines = to_edgelist_lines(graph)
        return "\n".join(lines) + ("\n" if lines else "")
    if fmt == "dot":
        return to_dot(graph)
    if fmt == "json":
        return to_json(graph)
    degrees = " ".join(str(d) for d in graph.degrees())
    return (
        f"graph: {graph.name}\n"
        f"vertices: {graph.n}\n"
        f"edges: {graph.edge_count()}\n"
        f"degrees: {degrees}\n"
    )


def _select_props(props: Optional[str]) -> list[str]:
    if props is None:
        return []
    names = [p.strip() for p in props.split(",") if p.strip()]
    unknown = [p for p in names if p not in analysis.REPORT_FIELDS]
    if unknown:
        raise GroupError(
            f"unknown properties: {', '.join(unknown)}; "
            f"known: {', '.join(analysis.REPORT_FIELDS)}"
        )
    return names


def _report_json(bundle, deleted: bool, props: Optional[str]) -> str:
    names = _select_props(props)
    report = analysis.analyze(bundle, deleted=deleted)
    full = report.to_dict()
    if names:
        full = {name: full[name] for name in names}
    return json.dumps(full) + "\n"


def _cmd_build(args) -> int:
    cap = args.max_order if args.max_order is not None else _default_cap()
    spec = parse_spec(args.group)
    group = spec.realize(validate=args.validate or "auto", max_order=cap)
    bundle = build_bundle(group)
    graph = bundle.deleted if args.deleted else bundle.epg
    _emit(_render_graph(graph, args.format), args.output)
    return 0


def _cmd_check(args) -> int:
    cap = args.max_order if args.max_order is not None else _default_cap()
    spec = parse_spec(args.group)
    group = spec.realize(validate=args.validate or "auto", max_order=cap)
    bundle = build_bundle(group)
    _emit(_report_json(bundle, args.deleted, args.props), args.output)
    return 0


def _cmd_verify(args) -> int:
    ids = [t.strip() for t in args.theorem.split(",") if t.strip()]
    if ids == ["all"]:
        checks = list(CHECKS)
    else:
        unknown = [i for i in ids if i not in CHECKS_BY_ID]
        if unknown:
            raise GroupError(
                f"unknown theorem ids: {', '.join(unknown)}; "
                f"known: {', '.join(c.check_id for c in CHECKS)} or 'all'"
            )
        checks = [CHECKS_BY_ID[i] for i in ids]
    cap = max(args.roster_max, _default_cap())
    cache = BundleCache(max_order=cap, validate=args.validate or "auto")
    standard = roster_generate(args.roster_max)
    lines = []
    failed = False
    for check in checks:
        roster = check.roster(args.roster_max) if check.roster is not None else standard
        report = run_check(check, roster, cache=cache, max_order=cap)
        if report.counterexamples:
            failed = True
        if report.vacuous and check.direction == "iff":
            failed = True
        lines.append(json.dumps(report.to_dict()))
    _emit("\n".join(lines) + "\n", args.output)
    return 1 if failed else 0


def _cmd_ingest(args) -> int:
    cap = args.max_order if args.max_order is not None else _default_cap()
    try:
        text = args.path.read_text(encoding="utf-8")
    except OSError as exc:
        raise GroupError(f"cannot read {args.path}: {exc}") from None
    group = ingest_cayley(text, validate=args.validate or "full", max_order=cap)
    bundle = build_bundle(group)
    _emit(_report_json(bundle, args.deleted, args.props), args.output)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "build": _cmd_build,
        "check": _cmd_check,
        "verify": _cmd_verify,
        "ingest": _cmd_ingest,
    }
    try:
        return handlers[args.command](args)
    except GroupError as exc:
        law = getattr(exc, "law", None)
        prefix = f"{law} violation: " if law else ""
        print(f"epgraph: error: {prefix}{exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
