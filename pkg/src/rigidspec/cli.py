"""Command line front end.

Subcommands:
  analyze         per-graph reports for a graph6 corpus (file or stdin)
  laman-extremal  radius maximisers among minimally rigid graphs per order
  family-sweep    closed-form vs eigensolver radius grid for the
                  two-clique family, with the monotonicity check
  extremal        structural audit of the two-clique extremal graphs

Exit codes: 0 all checks consistent, 1 a consistency check failed,
2 invalid input (bad arguments or unparsable corpus lines).
"""
from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from typing import Optional, Sequence

from .verify import (
    REPORT_TOL,
    analyze_lines,
    extremal_family_report,
    family_sweep_report,
    json_stable,
    laman_extremal_report,
    report_is_consistent,
    reports_to_csv,
)

ENV_SEED = "RIGIDSPEC_SEED"
DEFAULT_SEED = 1729


def _default_seed() -> int:
    raw = os.environ.get(ENV_SEED)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {ENV_SEED}={raw!r}: expected an integer")


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="rigidspec",
        description="Planar rigidity and spectral threshold checks for "
                    "graph6 corpora.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tol", type=float, default=REPORT_TOL,
                       help="comparison tolerance for threshold flags")
        p.add_argument("--seed", type=int, default=None,
                       help=f"random seed (default: ${ENV_SEED} or "
                            f"{DEFAULT_SEED})")

    p = sub.add_parser("analyze", help="analyze a graph6 corpus")
    p.add_argument("path", nargs="?", default="-",
                   help="corpus file, or - for stdin")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for large corpora")
    common(p)

    p = sub.add_parser("laman-extremal",
                       help="check the radius maximiser among minimally "
                            "rigid graphs")
    p.add_argument("--nmin", type=int, default=3)
    p.add_argument("--nmax", type=int, default=8)
    common(p)

    p = sub.add_parser("family-sweep",
                       help="closed-form radius grid for the two-clique "
                            "family")
    p.add_argument("--links", type=int, default=2)
    p.add_argument("--clique-min", dest="amin", type=int, default=3)
    p.add_argument("--clique-max", dest="amax", type=int, default=12)
    p.add_argument("--nmax", type=int, default=60)
    common(p)

    p = sub.add_parser("extremal",
                       help="audit the two-clique extremal graphs for a "
                            "minimum degree")
    p.add_argument("--delta", type=int, default=6)
    p.add_argument("--nmax", type=int, default=26)
    common(p)

    return top


def _rows_csv(rows: Sequence[dict]) -> str:
    if not rows:
        return ""
    cols = list(rows[0].keys())
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(cols)
    for r in rows:
        w.writerow(["" if r.get(c) is None else r.get(c) for c in cols])
    return buf.getvalue()


def _emit_sweep(report: dict, fmt: str, out) -> None:
    if fmt == "csv" and "rows" in report:
        out.write(_rows_csv(report["rows"]))
    else:
        out.write(json_stable(report) + "\n")


def _cmd_analyze(args, out) -> int:
    if args.path == "-":
        lines = sys.stdin.readlines()
    else:
        try:
            with open(args.path, "r", encoding="ascii") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"cannot read {args.path}: {exc}", file=sys.stderr)
            return 2
    reports, errors = analyze_lines(lines, tol=args.tol, jobs=args.jobs)
    if args.format == "csv":
        out.write(reports_to_csv(reports))
    else:
        for r in reports:
            out.write(json_stable(r) + "\n")
    for err in errors:
        print(err, file=sys.stderr)
    if errors:
        return 2
    if any(not report_is_consistent(r) for r in reports):
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    seed = args.seed if args.seed is not None else _default_seed()
    out = sys.stdout
    try:
        if args.command == "analyze":
            return _cmd_analyze(args, out)
        if args.command == "laman-extremal":
            report = laman_extremal_report(args.nmin, args.nmax)
        elif args.command == "family-sweep":
            report = family_sweep_report(args.links, args.amin, args.amax,
                                         args.nmax)
        else:
            report = extremal_family_report(args.delta, args.nmax, seed=seed)
    except ValueError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return 2
    _emit_sweep(report, args.format, out)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
