"""How twist counts depend on the size of the central polygon.

Rebuilds the square and octagon twists for a range of boundary half-widths
(the central polygon stays fixed) and counts valid assignments.  A small
sheet lets pleats reach the edge before they collide, so more assignments
fold.

    python scripts/twist_proportions.py --half-widths 3 4 6 8
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from make_fixtures import OCTAGON, SQUARE, twist  # noqa: E402

from flatfold.layers import count_pattern, iter_locally_valid  # noqa: E402


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--half-widths", type=int, nargs="+", default=[3, 4, 6, 8])
    ap.add_argument("--octagon-tilt", type=int, nargs=2, default=(4, 3), metavar=("C", "S"))
    args = ap.parse_args(argv)
    for name, poly, tilt in (("square", SQUARE, (1, 1)), ("octagon", OCTAGON, tuple(args.octagon_tilt))):
        for h in args.half_widths:
            try:
                cp = twist(poly, h, f"{name}_{h}", tilt)
            except ValueError as exc:
                print(f"{name:8} half-width {h}: skipped ({exc})")
                continue
            local = sum(1 for _ in iter_locally_valid(cp))
            print(f"{name:8} half-width {h}: {len(cp.creases)} creases, {len(cp.faces)} faces, "
                  f"{local} locally valid, {count_pattern(cp)} valid")


if __name__ == "__main__":
    main()
