"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 dart cap
exceeded. Every number in JSON output is a decimal string.
"""
from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import sys
from typing import Sequence

from .counts import METHODS, count_tight, slicings
from .mapgen import DartCapExceeded, dart_cap, oracle_count
from .numeric import format_rational
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def parse_boundaries(text: str) -> list[int]:
    try:
        out = [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError:
        raise UsageError(f"boundaries must be comma-separated integers, got {text!r}") from None
    if not out:
        raise UsageError("no boundaries given")
    if any(d < 0 for d in out):
        raise UsageError("boundary lengths must be non-negative")
    if not any(out):
        raise UsageError("at least one boundary must have positive length")
    return out


def _emit(obj: dict | list) -> None:
    print(json.dumps(obj))


def double_factorial_odd(n: int) -> int:
    """(n-1)!! for even n, the number of perfect matchings on n darts."""
    if n % 2:
        return 0
    out = 1
    for k in range(n - 1, 0, -2):
        out *= k
    return out


def cmd_count(args: argparse.Namespace) -> int:
    ds = parse_boundaries(args.boundaries)
    value = count_tight(ds, args.method)
    _emit({"boundaries": ds, "value": str(value), "method": args.method})
    return EXIT_OK


def cmd_slicings(args: argparse.Namespace) -> int:
    ds = parse_boundaries(args.boundaries)
    _emit({"boundaries": ds, "value": str(slicings(ds))})
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    ds = parse_boundaries(args.boundaries)
    n_darts = sum(ds)
    value = oracle_count(ds, tight=not args.non_tight, jobs=args.jobs)
    _emit(
        {
            "boundaries": ds,
            "value": format_rational(value),
            "tight": not args.non_tight,
            "darts": str(n_darts),
            "involutions": str(double_factorial_odd(n_darts)),
            "dart_cap": str(dart_cap()),
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    reports = run_suites(args.suite, args.bound)
    ok = all(r.ok for r in reports)
    _emit({"ok": ok, "bound": None if args.bound is None else str(args.bound), "suites": [r.to_dict() for r in reports]})
    return EXIT_OK if ok else EXIT_FAIL


def table_rows(n: int, d_max: int, tight: bool) -> list[tuple[tuple[int, ...], int]]:
    f = count_tight if tight else slicings
    rows = []
    for ds in itertools.product(range(d_max + 1), repeat=n):
        if any(ds):
            rows.append((ds, f(list(ds))))
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    if args.n < 3:
        raise UsageError("--n must be at least 3")
    if args.max < 0:
        raise UsageError("--max must be non-negative")
    rows = table_rows(args.n, args.max, not args.non_tight)
    if args.format == "json":
        text = json.dumps([{"boundaries": list(ds), "value": str(v)} for ds, v in rows]) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\r\n")
        w.writerow([f"d{i + 1}" for i in range(args.n)] + ["value"])
        for ds, v in rows:
            w.writerow([*ds, v])
        text = buf.getvalue()
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tightmaps", description="Exact counts of planar tight maps and their checks.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="tight map count for given boundary lengths")
    p.add_argument("--boundaries", required=True, help="comma-separated lengths, 0 for a marked vertex")
    p.add_argument("--method", choices=METHODS, default="unified")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("slicings", help="count of all planar maps (not necessarily tight)")
    p.add_argument("--boundaries", required=True)
    p.set_defaults(func=cmd_slicings)

    p = sub.add_parser("oracle", help="brute-force count by enumerating rotation systems")
    p.add_argument("--boundaries", required=True)
    p.add_argument("--non-tight", action="store_true", help="drop the tightness condition")
    p.add_argument("--jobs", type=_positive_int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=[*SUITES, "all"], help="repeatable; default all")
    p.add_argument("--bound", type=_positive_int, default=None, help="size bound passed to each suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table", help="grid of counts over all length tuples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--tight", dest="non_tight", action="store_false")
    g.add_argument("--non-tight", dest="non_tight", action="store_true")
    p.add_argument("--output", help="write to this file instead of stdout")
    p.set_defaults(func=cmd_table)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if getattr(args, "suite", "x") is None:
        args.suite = ["all"]
    try:
        return args.func(args)
    except DartCapExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
