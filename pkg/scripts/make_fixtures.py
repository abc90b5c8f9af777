"""Regenerate the pattern fixtures in src/flatfold/fixtures/.

Both twists are built the same way: a central equiangular polygon, and from
each end of every polygon side a pleat ray.  The ray leaves along the side's
outward normal turned clockwise by a tilt angle, given as an integer direction
``(c, s)`` so coordinates stay rational: (1, 1) is 45 degrees, (4, 3) is
atan(3/4) ~ 36.87 degrees.  Rays run to a square boundary
of half-width ``--half-width``.  The generator refuses layouts in which two
creases cross.

    python scripts/make_fixtures.py            # rewrite all fixtures
    python scripts/make_fixtures.py --check    # compare with the pinned files
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from flatfold.geometry import orient, sub
from flatfold.pattern import FIXTURE_DIR, CreasePattern, StampGrid, dumps_pattern, stamp_grid


def pleat_direction(side, tilt):
    """Outward normal of a counterclockwise side, turned clockwise by ``tilt``."""
    x, y = side[1], -side[0]
    c, s = tilt
    return (x * c + y * s, -x * s + y * c)


SQUARE = [(0, 2), (-2, 0), (0, -2), (2, 0)]  # central diamond, counterclockwise
STAMPS = [(2, 2), (2, 3), (3, 3), (2, 5)]
OCTAGON = [(-1, -2), (1, -2), (2, -1), (2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1)]


def _exit(p, d, half):
    """First hit of ray p + t d with the square boundary."""
    best = None
    for axis in (0, 1):
        if d[axis] == 0:
            continue
        for wall in (-half, half):
            t = (wall - p[axis]) / d[axis]
            if t > 0 and (best is None or t < best):
                best = t
    return (p[0] + best * d[0], p[1] + best * d[1])


def _proper_cross(a, b, c, d) -> bool:
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 == o2 == 0:
        # collinear: overlapping beyond a shared endpoint is a crossing
        u = sub(b, a)
        ts = sorted([Fraction(0), (sub(c, a)[0] * u[0] + sub(c, a)[1] * u[1])])
        return False if {a, b} & {c, d} else (min(ts) < 0 < max(ts))
    return o1 * o2 < 0 and o3 * o4 < 0


def twist(polygon, half: int, name: str, tilt=(1, 1)) -> CreasePattern:
    poly = [(Fraction(x), Fraction(y)) for x, y in polygon]
    n = len(poly)
    pts = list(poly)
    creases = [(k, (k + 1) % n) for k in range(n)]
    for k in range(n):
        a, b = poly[k], poly[(k + 1) % n]
        ray = pleat_direction(sub(b, a), tilt)
        for idx in (k, (k + 1) % n):
            end = _exit(pts[idx], ray, Fraction(half))
            pts.append(end)
            creases.append((idx, len(pts) - 1))
    segs = [(pts[i], pts[j]) for i, j in creases]
    for (a, b), (c, d) in combinations(segs, 2):
        if _proper_cross(a, b, c, d):
            raise ValueError(f"creases {a}-{b} and {c}-{d} cross")
    H = Fraction(half)
    corners = [(-H, -H), (H, -H), (H, H), (-H, H)]
    boundary = []
    for c in corners:
        if c not in pts:
            pts.append(c)
        boundary.append(pts.index(c))
    return CreasePattern(tuple(pts), tuple(creases), tuple(boundary), name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--check", action="store_true", help="only compare against pinned fixtures")
    ap.add_argument("--square-half-width", type=int, default=4)
    ap.add_argument("--octagon-half-width", type=int, default=6)
    ap.add_argument("--octagon-tilt", type=int, nargs=2, default=(4, 3), metavar=("C", "S"))
    args = ap.parse_args(argv)

    built = {
        "square_twist": twist(SQUARE, args.square_half_width, "square_twist"),
        "octagon_twist": twist(OCTAGON, args.octagon_half_width, "octagon_twist", tuple(args.octagon_tilt)),
    }
    for m, n in STAMPS:
        built[f"stamp_{m}x{n}"] = stamp_grid(StampGrid(m, n))
    status = 0
    for name, cp in built.items():
        path = FIXTURE_DIR / f"{name}.json"
        doc = cp.to_json()
        if args.check:
            if not path.exists():
                print(f"{name}: missing")
                status = 1
                continue
            pinned = json.loads(path.read_text())
            pinned.pop("assignment", None)
            pinned.pop("comment", None)
            same = pinned == doc
            print(f"{name}: {'matches' if same else 'DIFFERS from'} pinned fixture")
            status |= not same
        else:
            if path.exists():
                old = json.loads(path.read_text())
                for key in ("comment", "assignment"):
                    if key in old:
                        doc[key] = old[key]
            path.write_text(dumps_pattern(doc))
            print(f"wrote {path} ({len(cp.creases)} creases, {len(cp.faces)} faces)")
    return status


if __name__ == "__main__":
    sys.exit(main())
