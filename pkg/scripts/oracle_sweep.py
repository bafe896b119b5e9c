"""Compare formula counts with brute-force map enumeration over a sweep."""
from __future__ import annotations

import argparse
import csv
import sys
import time

from tightmaps.counts import count_tight, slicings
from tightmaps.mapgen import oracle_sweep_both
from tightmaps.numeric import format_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-total", type=int, default=12, help="largest total degree")
    ap.add_argument("--max-zeros", type=int, default=2, help="extra marked vertices")
    ap.add_argument("--cap", type=int, default=None, help="dart cap (default from env)")
    ap.add_argument("--csv", help="write rows to this file")
    args = ap.parse_args()

    t = time.perf_counter()
    rows, bad = [], 0
    for ds, tight, plain in oracle_sweep_both(args.max_total, args.max_zeros, cap=args.cap):
        ft, fp = count_tight(list(ds)), slicings(list(ds))
        ok = ft == tight and fp == plain
        bad += not ok
        rows.append((ds, tight, ft, plain, fp, ok))
    elapsed = time.perf_counter() - t

    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["lengths", "oracle_tight", "formula_tight", "oracle_all", "formula_all", "match"])
            for ds, a, b, c, d, ok in rows:
                w.writerow([" ".join(map(str, ds)), format_rational(a), b, format_rational(c), d, ok])
    print(f"{len(rows)} rows, {bad} mismatches, {elapsed:.1f}s")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
