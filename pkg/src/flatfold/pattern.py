"""Multivertex crease patterns with rational coordinates.

File format (JSON, one object)::

    {
      "name": "square_twist",                 # optional
      "points": [["0", "0"], ["3/2", "1"]],   # exact rationals as strings (ints allowed)
      "creases": [[0, 1], ...],               # point-index pairs, pre-subdivided
      "boundary": [0, 4, 7, 3],               # convex polygon, counterclockwise
      "assignment": "MVVM..."                 # optional example labels over M/V/U
    }

Points lying on a boundary side need not be listed in ``boundary``; sides are
split at them automatically.  Coordinates given as JSON floats are rejected.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from pathlib import Path

from .angles import PlanarAngle, parse_rational
from .enumeration import is_valid_assignment
from .geometry import (
    Isometry,
    angle_sort_key,
    drop_collinear,
    on_segment,
    orient,
    signed_area2,
    sub,
)
from .vertex import Label, MVAssignment, ParseError, VertexFold

FIXTURE_DIR = Path(__file__).parent / "fixtures"


class PatternError(ValueError):
    pass


def parse_labels(text: str, n: int) -> tuple:
    """Crease labels over M/V/U; ``U`` (unassigned) becomes ``None``."""
    text = text.strip().upper()
    if len(text) != n or any(ch not in "MVU" for ch in text):
        raise ParseError(f"expected {n} labels over M/V/U, got {text!r}")
    return tuple(None if ch == "U" else Label(ch) for ch in text)


def format_labels(labels) -> str:
    return "".join("U" if l is None else l.value for l in labels)


@dataclass(frozen=True)
class InducedVertex:
    point: int
    creases: tuple  # crease indices in counterclockwise order
    fold: VertexFold


@dataclass(frozen=True, eq=False)
class CreasePattern:
    points: tuple
    creases: tuple
    boundary: tuple
    name: str = ""
    example_assignment: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n = len(self.points)
        for i, j in self.creases:
            if not (0 <= i < n and 0 <= j < n) or i == j:
                raise PatternError(f"bad crease ({i}, {j})")
        if len(self.boundary) < 3:
            raise PatternError("boundary needs at least three points")
        poly = [self.points[i] for i in self.boundary]
        if signed_area2(poly) <= 0:
            raise PatternError("boundary must be counterclockwise")
        for k in range(len(poly)):
            if orient(poly[k - 2], poly[k - 1], poly[k]) < 0:
                raise PatternError("boundary must be convex")
        self._check_subdivided()

    def _check_subdivided(self):
        """Creases may meet only at shared endpoints, and no point may sit inside a crease."""
        pts = self.points
        if len({frozenset(c) for c in self.creases}) != len(self.creases):
            raise PatternError("duplicate crease")
        for cid, (i, j) in enumerate(self.creases):
            for k in range(len(pts)):
                if k not in (i, j) and on_segment(pts[k], pts[i], pts[j]):
                    raise PatternError(f"point {k} lies inside crease {cid}; split the crease there")
        for c1 in range(len(self.creases)):
            a, b = (pts[x] for x in self.creases[c1])
            for c2 in range(c1 + 1, len(self.creases)):
                c, d = (pts[x] for x in self.creases[c2])
                o1, o2 = orient(a, b, c), orient(a, b, d)
                o3, o4 = orient(c, d, a), orient(c, d, b)
                if o1 * o2 < 0 and o3 * o4 < 0:
                    raise PatternError(f"creases {c1} and {c2} cross")

    # -- topology -------------------------------------------------------

    @cached_property
    def boundary_edges(self) -> tuple:
        """Boundary sides split at every point lying on them."""
        edges = []
        b = self.boundary
        for k in range(len(b)):
            p, q = b[k], b[(k + 1) % len(b)]
            P, Q = self.points[p], self.points[q]
            on = [i for i in range(len(self.points)) if i not in (p, q) and on_segment(self.points[i], P, Q)]
            d = sub(Q, P)
            on.sort(key=lambda i: (self.points[i][0] - P[0]) * d[0] + (self.points[i][1] - P[1]) * d[1])
            chain = [p] + on + [q]
            edges.extend(zip(chain, chain[1:]))
        return tuple(edges)

    @cached_property
    def on_boundary(self) -> frozenset:
        return frozenset(i for e in self.boundary_edges for i in e)

    @cached_property
    def interior_vertices(self) -> tuple:
        used = {i for c in self.creases for i in c}
        return tuple(sorted(used - self.on_boundary))

    @cached_property
    def _half_edges(self):
        """Outgoing half-edges per point, counterclockwise; value is (target, crease id or None)."""
        out = {i: [] for i in range(len(self.points))}
        for cid, (i, j) in enumerate(self.creases):
            out[i].append((j, cid))
            out[j].append((i, cid))
        for i, j in self.boundary_edges:
            out[i].append((j, None))
            out[j].append((i, None))
        for i, lst in out.items():
            lst.sort(key=lambda e: angle_sort_key(sub(self.points[e[0]], self.points[i])))
        return out

    @cached_property
    def _face_data(self):
        out = self._half_edges
        seen = set()
        faces = []
        edge_face = {}
        for u in out:
            for v, _ in out[u]:
                if (u, v) in seen:
                    continue
                cycle = []
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    cycle.append((a, b))
                    nbrs = out[b]
                    idx = [t for t, _ in nbrs].index(a)
                    a, b = b, nbrs[idx - 1][0]
                poly = [self.points[x] for x, _ in cycle]
                if signed_area2(poly) > 0:
                    for he in cycle:
                        edge_face[he] = len(faces)
                    faces.append(tuple(x for x, _ in cycle))
        return tuple(faces), edge_face

    @property
    def faces(self) -> tuple:
        """Bounded faces as counterclockwise point-index cycles."""
        return self._face_data[0]

    @cached_property
    def crease_faces(self) -> tuple:
        """(left face, right face) of each crease, oriented from its first point."""
        edge_face = self._face_data[1]
        res = []
        for i, j in self.creases:
            left = edge_face.get((i, j))
            right = edge_face.get((j, i))
            if left is None or right is None:
                raise PatternError(f"crease ({i}, {j}) does not separate two faces")
            res.append((left, right))
        return tuple(res)

    def face_polygon(self, f: int) -> list:
        return drop_collinear([self.points[i] for i in self.faces[f]])

    # -- folding geometry ------------------------------------------------

    @cached_property
    def face_maps(self) -> tuple:
        """Folded-position isometry per face, root face 0 fixed, via BFS over creases."""
        nf = len(self.faces)
        adj = {f: [] for f in range(nf)}
        for cid, (l, r) in enumerate(self.crease_faces):
            adj[l].append((r, cid))
            adj[r].append((l, cid))
        maps = [None] * nf
        maps[0] = Isometry.identity()
        queue = deque([0])
        while queue:
            f = queue.popleft()
            for g, cid in adj[f]:
                if maps[g] is None:
                    i, j = self.creases[cid]
                    maps[g] = maps[f].compose(Isometry.reflection(self.points[i], self.points[j]))
                    queue.append(g)
        if any(m is None for m in maps):
            raise PatternError("face adjacency graph is disconnected")
        return tuple(maps)

    @cached_property
    def maps_consistent(self) -> bool:
        """Reflections around every closed face cycle compose to the identity."""
        maps = self.face_maps
        for cid, (l, r) in enumerate(self.crease_faces):
            i, j = self.creases[cid]
            if maps[l].compose(Isometry.reflection(self.points[i], self.points[j])) != maps[r]:
                return False
        return True

    def face_up(self, f: int) -> bool:
        return self.face_maps[f].det > 0

    # -- single-vertex views ---------------------------------------------

    @cached_property
    def induced_vertices(self) -> tuple:
        out = self._half_edges
        res = []
        for p in self.interior_vertices:
            ring = out[p]
            if any(cid is None for _, cid in ring):
                raise PatternError(f"interior point {p} touches the boundary")
            dirs = [sub(self.points[t], self.points[p]) for t, _ in ring]
            angles = [PlanarAngle.between(dirs[k], dirs[(k + 1) % len(dirs)]) for k in range(len(dirs))]
            if len(angles) == 1:
                angles = [PlanarAngle.full()]
            fold = VertexFold.from_angles(angles)
            res.append(InducedVertex(p, tuple(cid for _, cid in ring), fold))
        return tuple(res)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        def s(x: Fraction) -> str:
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

        doc = {
            "points": [[s(x), s(y)] for x, y in self.points],
            "creases": [list(c) for c in self.creases],
            "boundary": list(self.boundary),
        }
        if self.name:
            doc = {"name": self.name, **doc}
        if self.example_assignment:
            doc["assignment"] = self.example_assignment
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "CreasePattern":
        try:
            pts = []
            for pt in doc["points"]:
                if len(pt) != 2:
                    raise PatternError(f"point {pt!r} is not a pair")
                coords = []
                for c in pt:
                    if isinstance(c, bool) or isinstance(c, float):
                        raise PatternError(f"coordinate {c!r} is not an exact rational")
                    coords.append(Fraction(c) if isinstance(c, int) else parse_rational(str(c)))
                pts.append(tuple(coords))
            creases = tuple((int(a), int(b)) for a, b in doc["creases"])
            boundary = tuple(int(i) for i in doc["boundary"])
        except (KeyError, TypeError) as exc:
            raise PatternError(f"malformed pattern document: {exc}") from None
        except ValueError as exc:
            raise PatternError(str(exc)) from None
        return cls(tuple(pts), creases, boundary, doc.get("name", ""), doc.get("assignment"))


def dumps_pattern(doc: dict) -> str:
    """JSON text with one point or crease per line."""
    lines = ["{"]
    items = list(doc.items())
    for k, (key, val) in enumerate(items):
        comma = "," if k < len(items) - 1 else ""
        if key in ("points", "creases") and val:
            inner = ",\n".join("  " + json.dumps(x) for x in val)
            lines.append(f" {json.dumps(key)}: [\n{inner}\n ]{comma}")
        else:
            lines.append(f" {json.dumps(key)}: {json.dumps(val)}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def load_pattern(path) -> CreasePattern:
    path = Path(path)
    if not path.exists() and (FIXTURE_DIR / f"{path.name}.json").exists():
        path = FIXTURE_DIR / f"{path.name}.json"
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise PatternError(f"{path}: {exc}") from None
    return CreasePattern.from_json(doc)


def fixture(name: str) -> CreasePattern:
    return load_pattern(FIXTURE_DIR / f"{name}.json")


def induced_labels(iv: InducedVertex, labels) -> MVAssignment:
    return MVAssignment(tuple(labels[c] for c in iv.creases))


def local_filter(cp: CreasePattern, labels) -> bool:
    """Every interior vertex passes the single-vertex test under the induced labels."""
    if len(labels) != len(cp.creases):
        raise ValueError("one label per crease required")
    for iv in cp.induced_vertices:
        if not is_valid_assignment(iv.fold, induced_labels(iv, labels)):
            return False
    return True


# -- generators -------------------------------------------------------------


@dataclass(frozen=True)
class StampGrid:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("stamp grid dimensions must be positive")


def stamp_grid(g: StampGrid) -> CreasePattern:
    """Unit stamps on ``[0, m] x [0, n]``; creases are the interior grid segments."""
    m, n = g.m, g.n
    if m * n < 2:
        raise ValueError("a single stamp has no creases")
    idx = {}
    pts = []
    for y in range(n + 1):
        for x in range(m + 1):
            idx[x, y] = len(pts)
            pts.append((Fraction(x), Fraction(y)))
    creases = []
    for x in range(1, m):  # vertical lines
        for y in range(n):
            creases.append((idx[x, y], idx[x, y + 1]))
    for y in range(1, n):  # horizontal lines
        for x in range(m):
            creases.append((idx[x, y], idx[x + 1, y]))
    boundary = (idx[0, 0], idx[m, 0], idx[m, n], idx[0, n])
    return CreasePattern(tuple(pts), tuple(creases), boundary, f"stamp_{m}x{n}")


def stamp_bound(g: StampGrid) -> int:
    """Upper bound on valid assignments of an ``m x n`` stamp sheet: ``2**(mn-1)``."""
    if g.m == 1 or g.n == 1:
        return 2 ** (max(g.m, g.n) - 1)
    return 8 * 4 ** (g.m - 2) * 4 ** (g.n - 2) * 2 ** ((g.m - 2) * (g.n - 2))


def single_vertex_pattern(directions, radius: int = 4, name: str = "") -> CreasePattern:
    """Creases from the origin along integer ``directions`` (counterclockwise) to
    the boundary square ``[-radius, radius]^2``."""
    R = Fraction(radius)
    corners = [(-R, -R), (R, -R), (R, R), (-R, R)]
    pts = [(Fraction(0), Fraction(0))]
    creases = []
    for dx, dy in directions:
        s = R / max(abs(dx), abs(dy))
        end = (dx * s, dy * s)
        if end in pts:
            raise ValueError(f"duplicate direction {dx, dy}")
        pts.append(end)
        creases.append((0, len(pts) - 1))
    boundary = []
    for c in corners:
        if c not in pts:
            pts.append(c)
        boundary.append(pts.index(c))
    return CreasePattern(tuple(pts), tuple(creases), tuple(boundary), name)


def random_single_vertex_pattern(half_degree: int, seed: int, spread: int = 5) -> CreasePattern:
    """Flat-foldable single-vertex pattern with rational coordinates.

    ``2n - 1`` creases point along random integer directions; the last one lies
    on the axis of the composed reflections, which closes the cycle of face
    maps.  Draws are repeated until that axis falls in the last angular gap and
    the exact alternating-sum test passes.
    """
    import random

    from .vertex import kawasaki_holds

    rng = random.Random(seed)
    while True:
        dirs = set()
        while len(dirs) < 2 * half_degree - 1:
            v = (rng.randint(-spread, spread), rng.randint(-spread, spread))
            if v == (0, 0):
                continue
            g = max(abs(v[0]), abs(v[1]))
            dirs.add((Fraction(v[0], g), Fraction(v[1], g)))
        dirs = sorted(dirs, key=angle_sort_key)
        total = Isometry.identity()
        origin = (Fraction(0), Fraction(0))
        for d in dirs:
            total = Isometry.reflection(origin, d).compose(total)
        axis = (1 + total.a, total.c) if (1 + total.a, total.c) != (0, 0) else (Fraction(0), Fraction(1))
        for cand in (axis, (-axis[0], -axis[1])):
            g = max(abs(cand[0]), abs(cand[1]))
            cand = (cand[0] / g, cand[1] / g)
            if cand in dirs:
                continue
            ring = sorted(dirs + [cand], key=angle_sort_key)
            try:
                cp = single_vertex_pattern(ring, name=f"random_vertex_{half_degree}_{seed}")
                fold = cp.induced_vertices[0].fold
            except (ValueError, PatternError):
                continue
            if kawasaki_holds(fold) and cp.maps_consistent:
                return cp


def compass_vertex_patterns(max_degree: int = 8) -> list:
    """Every flat-foldable vertex whose creases use the eight 45-degree compass directions."""
    from itertools import combinations

    from .vertex import kawasaki_holds

    compass = [(1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1)]
    out = []
    for deg in range(2, max_degree + 1, 2):
        for sub_dirs in combinations(compass, deg):
            cp = single_vertex_pattern(sub_dirs, name="compass_" + "_".join(f"{x}{y}" for x, y in sub_dirs))
            if kawasaki_holds(cp.induced_vertices[0].fold):
                out.append(cp)
    return out
