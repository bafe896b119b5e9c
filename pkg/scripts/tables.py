"""Print small tables of tight counts next to all-map counts."""
from __future__ import annotations

import argparse
import itertools
import sys

from tightmaps.counts import count_tight, slicings


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=4, help="number of boundaries")
    ap.add_argument("--max", type=int, default=4, help="largest length")
    args = ap.parse_args()

    print(f"{'lengths':>{3 * args.n + 2}}  {'tight':>8}  {'all':>8}")
    for ds in itertools.combinations_with_replacement(range(args.max, -1, -1), args.n):
        if not any(ds):
            continue
        t, a = count_tight(list(ds)), slicings(list(ds))
        if a:
            print(f"{' '.join(f'{d:2d}' for d in ds):>{3 * args.n + 2}}  {t:>8}  {a:>8}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
