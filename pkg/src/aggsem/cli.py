"""Command-line front end: ``aggsem <command> [flags]``.

Exit codes: 0 success, 1 validation or semantic failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from . import bench
from .aggregators import CLASSIC_NAMES, aggregator_names, get_aggregator, get_combiner
from .engine import LITERATURE, AggregativeSemantics, EvaluationError, as_aggregative, evaluate, evaluate_literature
from .graph import CycleError, InvalidGraphError, ParseError, read_document, serialize_qbaf, validate
from .postulates import SamplingConfig, postulate_matrix
from .principles import PRINCIPLES, GeneratorConfig, check_principle


class UsageError(Exception):
    """Bad flag combination; reported with exit code 2."""


def _default_seed() -> int:
    raw = os.environ.get("QBAF_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"QBAF_SEED must be an integer, got {raw!r}") from None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _semantics(args: argparse.Namespace) -> AggregativeSemantics:
    triple = (args.phi_r, args.phi_s, args.phi_f)
    if args.semantics:
        if any(triple):
            raise UsageError("--semantics cannot be combined with --phi-r/--phi-s/--phi-f")
        return as_aggregative(args.semantics)
    if not all(triple):
        missing = [f for f, v in zip(("--phi-r", "--phi-s", "--phi-f"), triple) if not v]
        raise UsageError(f"missing {', '.join(missing)} (or pass --semantics)")
    try:
        r = get_aggregator(args.phi_r)
    except KeyError as exc:
        raise UsageError(f"--phi-r: {exc.args[0]}") from None
    try:
        s = get_aggregator(args.phi_s)
    except KeyError as exc:
        raise UsageError(f"--phi-s: {exc.args[0]}") from None
    try:
        f = get_combiner(args.phi_f)
    except KeyError as exc:
        raise UsageError(f"--phi-f: {exc.args[0]}") from None
    try:
        return AggregativeSemantics(r, s, f)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _add_triple(p: argparse.ArgumentParser) -> None:
    p.add_argument("--phi-r", metavar="NAME", help="attack aggregator")
    p.add_argument("--phi-s", metavar="NAME", help="support aggregator")
    p.add_argument("--phi-f", metavar="NAME", help="combiner, or an aggregator wrapped with final_from")
    p.add_argument("--semantics", choices=LITERATURE, help="literature semantics instead of a triple")


# ---------------------------------------------------------------------------
# Commands


def cmd_validate(args: argparse.Namespace) -> int:
    g, warnings = read_document(_read(args.file))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    report = validate(g)
    if report.ok:
        print(f"valid: {len(g)} arguments, {len(g.attacks)} attacks, {len(g.supports)} supports")
        return 0
    for v in report.violations:
        print(f"error: {v}", file=sys.stderr)
    return 1


def cmd_eval(args: argparse.Namespace) -> int:
    g, warnings = read_document(_read(args.file))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.semantics and not any((args.phi_r, args.phi_s, args.phi_f)):
        degrees = evaluate_literature(args.semantics, g)
    else:
        degrees = evaluate(_semantics(args), g)
    sys.stdout.write(degrees.to_csv(args.round))
    return 0


def cmd_postulates(args: argparse.Namespace) -> int:
    names = args.agg or list(CLASSIC_NAMES)
    try:
        aggs = [get_aggregator(n) for n in names]
    except KeyError as exc:
        raise UsageError(f"--agg: {exc.args[0]}") from None
    seed = args.seed if args.seed is not None else _default_seed()
    sys.stdout.write(postulate_matrix(aggs, SamplingConfig(seed=seed)).to_csv())
    return 0


def cmd_principles(args: argparse.Namespace) -> int:
    s = _semantics(args)
    seed = args.seed if args.seed is not None else _default_seed()
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    cfg = GeneratorConfig(seed=seed, trials=args.trials, max_args=args.max_args)
    chosen = [args.principle] if args.principle else list(PRINCIPLES)
    verdicts = [check_principle(s, p, cfg).to_json() for p in chosen]
    payload = {"semantics": s.label, "seed": seed, "verdicts": verdicts}
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    rows = bench.sweep_fig6()
    paths = bench.emit(args.out, rows)
    summary = bench.sweep_summary(rows)
    summary["files"] = sorted(str(p) for p in paths.values())
    print(json.dumps(summary, indent=2, sort_keys=True))
    return 0


def cmd_table4(args: argparse.Namespace) -> int:
    report = bench.reproduce_table4()
    sys.stdout.write(report.to_csv())
    failed = [row for row, ok in report.rows_passed.items() if not ok]
    if failed:
        print(f"rows outside tolerance: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_examples(args: argparse.Namespace) -> int:
    checks = bench.reproduce_examples()
    sys.stdout.write(bench.examples_csv(checks))
    failed = [c.name for c in checks if not c.passed]
    if failed:
        print(f"failed: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


def cmd_graphs(args: argparse.Namespace) -> int:
    if args.list or not args.id:
        print("\n".join(bench.GRAPH_IDS))
        return 0
    try:
        g = bench.paper_graph(args.id)
    except KeyError as exc:
        raise UsageError(f"--id: {exc.args[0]}") from None
    sys.stdout.write(serialize_qbaf(g))
    return 0


# ---------------------------------------------------------------------------
# Parser


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="aggsem", description="Aggregative gradual semantics for acyclic QBAFs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a QBAF file against the format invariants")
    p.add_argument("file", help="QBAF JSON file, or - for stdin")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("eval", help="compute degrees and print them as CSV")
    p.add_argument("file", help="QBAF JSON file, or - for stdin")
    _add_triple(p)
    p.add_argument("--round", type=int, metavar="N", help="round printed values to N decimals")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("postulates", help="postulate matrix for catalog aggregators")
    p.add_argument("--agg", action="append", metavar="NAME", help=f"aggregator (repeatable); any of {', '.join(aggregator_names())}")
    p.add_argument("--seed", type=int, help="sampling seed (default: QBAF_SEED or 0)")
    p.set_defaults(func=cmd_postulates)

    p = sub.add_parser("principles", help="search for principle counterexamples")
    _add_triple(p)
    p.add_argument("--principle", choices=PRINCIPLES, help="check one principle (default: all)")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--max-args", type=int, default=8)
    p.add_argument("--seed", type=int, help="generator seed (default: QBAF_SEED or 0)")
    p.set_defaults(func=cmd_principles)

    p = sub.add_parser("sweep", help="evaluate all 515 semantics on the final example graph")
    p.add_argument("--out", default=".", metavar="DIR", help="output directory (default: current)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("table4", help="compare the 15 reference rows; exit 1 if any row misses")
    p.set_defaults(func=cmd_table4)

    p = sub.add_parser("examples", help="recompute the small worked examples")
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("graphs", help="print an embedded example graph")
    p.add_argument("--id", help="graph id")
    p.add_argument("--list", action="store_true", help="list graph ids")
    p.set_defaults(func=cmd_graphs)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except CycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, InvalidGraphError, EvaluationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
