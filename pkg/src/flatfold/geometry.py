"""Exact planar geometry over rationals: isometries, reflections, convex clipping."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

Point = tuple  # (Fraction, Fraction)


def sub(p, q):
    return (p[0] - q[0], p[1] - q[1])


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def orient(a, b, c):
    """Twice the signed area of triangle abc (positive when counterclockwise)."""
    return cross(sub(b, a), sub(c, a))


def signed_area2(poly) -> Fraction:
    n = len(poly)
    return sum(cross(poly[i], poly[(i + 1) % n]) for i in range(n))


def on_segment(p, a, b) -> bool:
    """``p`` lies on the closed segment ``ab``."""
    if orient(a, b, p) != 0:
        return False
    return dot(sub(p, a), sub(p, b)) <= 0


def half_of(v) -> int:
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def angle_sort_key(v):
    """Key sorting direction vectors counterclockwise from the +x axis, exactly."""
    return _DirKey(v)


class _DirKey:
    __slots__ = ("v", "h")

    def __init__(self, v):
        self.v = v
        self.h = half_of(v)

    def __lt__(self, other):
        if self.h != other.h:
            return self.h < other.h
        return cross(self.v, other.v) > 0


@dataclass(frozen=True)
class Isometry:
    """``p -> A p + t`` with ``A = [[a, b], [c, d]]`` orthogonal."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    tx: Fraction
    ty: Fraction

    @classmethod
    def identity(cls) -> "Isometry":
        one, zero = Fraction(1), Fraction(0)
        return cls(one, zero, zero, one, zero, zero)

    @classmethod
    def reflection(cls, p, q) -> "Isometry":
        """Reflection across the line through ``p`` and ``q``."""
        dx, dy = q[0] - p[0], q[1] - p[1]
        n = dx * dx + dy * dy
        a = (dx * dx - dy * dy) / n
        b = 2 * dx * dy / n
        # A p + t = p
        tx = p[0] - (a * p[0] + b * p[1])
        ty = p[1] - (b * p[0] - a * p[1])
        return cls(a, b, b, -a, tx, ty)

    def __call__(self, p):
        return (self.a * p[0] + self.b * p[1] + self.tx, self.c * p[0] + self.d * p[1] + self.ty)

    def compose(self, inner: "Isometry") -> "Isometry":
        """``self after inner``."""
        a = self.a * inner.a + self.b * inner.c
        b = self.a * inner.b + self.b * inner.d
        c = self.c * inner.a + self.d * inner.c
        d = self.c * inner.b + self.d * inner.d
        tx, ty = self((inner.tx, inner.ty))
        return Isometry(a, b, c, d, tx, ty)

    @property
    def det(self) -> Fraction:
        return self.a * self.d - self.b * self.c


def clip_convex(subject: list, clip: list) -> list:
    """Intersection of two counterclockwise convex polygons (Sutherland-Hodgman)."""
    out = list(subject)
    n = len(clip)
    for i in range(n):
        if not out:
            break
        a, b = clip[i], clip[(i + 1) % n]
        inp, out = out, []
        m = len(inp)
        for j in range(m):
            p, q = inp[j], inp[(j + 1) % m]
            sp, sq = orient(a, b, p), orient(a, b, q)
            if sp >= 0:
                out.append(p)
            if (sp > 0 and sq < 0) or (sp < 0 and sq > 0):
                t = sp / (sp - sq)
                out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return out


def overlap_area2(p: list, q: list) -> Fraction:
    inter = clip_convex(p, q)
    if len(inter) < 3:
        return Fraction(0)
    return signed_area2(inter)


def drop_collinear(poly: list) -> list:
    out = []
    n = len(poly)
    for i in range(n):
        if orient(poly[i - 1], poly[i], poly[(i + 1) % n]) != 0:
            out.append(poly[i])
    return out


def line_crossing_interval(poly: list, p, q):
    """Parameter interval ``(t0, t1)`` along ``p + t (q - p)`` where the line passes
    through the interior of convex ``poly``; ``None`` unless the polygon has
    vertices strictly on both sides of the line."""
    sides = [orient(p, q, v) for v in poly]
    if not (any(s > 0 for s in sides) and any(s < 0 for s in sides)):
        return None
    d = sub(q, p)
    dd = dot(d, d)
    ts = []
    n = len(poly)
    for i in range(n):
        u, w = poly[i], poly[(i + 1) % n]
        su, sw = sides[i], sides[(i + 1) % n]
        if su == 0:
            ts.append(dot(sub(u, p), d) / dd)
        if (su > 0 and sw < 0) or (su < 0 and sw > 0):
            t = su / (su - sw)
            x = (u[0] + t * (w[0] - u[0]), u[1] + t * (w[1] - u[1]))
            ts.append(dot(sub(x, p), d) / dd)
    return min(ts), max(ts)
