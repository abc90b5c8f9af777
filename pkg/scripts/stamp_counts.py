"""Valid-assignment counts of small stamp sheets against the 2^(mn-1) bound.

For each m x n sheet prints the number of assignments passing the
single-vertex filter, the number that fold flat, the bound, and one
locally valid assignment that cannot fold, if any.

    python scripts/stamp_counts.py --max-area 10
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from flatfold.layers import iter_locally_valid, iter_valid
from flatfold.pattern import StampGrid, format_labels, stamp_bound, stamp_grid


@dataclass
class StampConfig:
    max_area: int = 10
    max_side: int = 5


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-area", type=int, default=StampConfig.max_area)
    ap.add_argument("--max-side", type=int, default=StampConfig.max_side)
    args = ap.parse_args(argv)
    print(f"{'sheet':>6} {'local':>6} {'valid':>6} {'bound':>6}  {'time':>6}  example rejected")
    for m in range(1, args.max_side + 1):
        for n in range(m, args.max_side + 1):
            if m * n < 2 or m * n > args.max_area:
                continue
            t0 = time.perf_counter()
            cp = stamp_grid(StampGrid(m, n))
            valid = {format_labels(a) for a in iter_valid(cp)}
            local = [format_labels(a) for a in iter_locally_valid(cp)]
            rejected = next((a for a in local if a not in valid), "-")
            dt = time.perf_counter() - t0
            print(f"{m}x{n:<4} {len(local):>6} {len(valid):>6} {stamp_bound(StampGrid(m, n)):>6}  {dt:5.1f}s  {rejected}")


if __name__ == "__main__":
    main()
