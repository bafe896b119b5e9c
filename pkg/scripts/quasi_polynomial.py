"""Fit the four-boundary counts as affine functions of the squared lengths,
one fit per parity class, and report the coefficients and held-out checks."""
from __future__ import annotations

import argparse
import itertools
import sys

from tightmaps.counts import count_tight
from tightmaps.verify import fit_affine_in_squares


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=11, help="largest length on the held-out grid")
    args = ap.parse_args()

    bad = 0
    for par in itertools.product((0, 1), repeat=4):
        if sum(par) % 2:
            zero = all(count_tight(list(ds)) == 0 for ds in itertools.product(*(range(p, args.max + 1, 2) for p in par)))
            print(f"parity {par}: identically zero: {zero}")
            bad += not zero
            continue
        c0, c = fit_affine_in_squares([p or 2 for p in par])
        misses = 0
        points = 0
        for ds in itertools.product(*(range(p, args.max + 1, 2) for p in par)):
            if not any(ds):
                continue
            points += 1
            misses += c0 + sum(ci * d * d for ci, d in zip(c, ds)) != count_tight(list(ds))
        terms = " + ".join(f"{ci} d{i + 1}^2" for i, ci in enumerate(c))
        print(f"parity {par}: N = {terms} + ({c0}); {points} points, {misses} misses")
        bad += misses
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
