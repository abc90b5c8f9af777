"""Brute-force validity by explicit layer stacking of the folded cross-section.

Walk once around the vertex: the cross-section becomes a chain of segments on
a line, segment ``j`` having length ``angles[j]`` and the direction reversing
at every crease.  An assignment is valid when some stacking order of the
segments respects every crease label and never lets paper pass through paper.
This module shares nothing with the reduction-based code in ``counting`` and
``enumeration``; it exists to check them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .angles import format_angle, zero_like
from .vertex import Label, MVAssignment, VertexFold

DEFAULT_ORACLE_CAP = 8


class OracleCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class FoldedProfile:
    """Crease positions ``x[0..d]`` with ``x[0] = 0``.

    Segment ``j`` (angle ``j``) runs from ``x[j]`` to ``x[j+1]``; crease ``j``
    sits at ``x[j]`` and joins segments ``j - 1`` and ``j``.  Closure means
    ``x[d] == x[0]``.
    """

    positions: tuple
    labels: MVAssignment | None = None

    @property
    def closes(self) -> bool:
        return self.positions[-1] == self.positions[0]

    @property
    def degree(self) -> int:
        return len(self.positions) - 1

    def segment(self, j: int) -> tuple:
        a, b = self.positions[j], self.positions[j + 1]
        return (a, b) if a < b else (b, a)

    def crease_position(self, c: int):
        return self.positions[c % self.degree]

    def crease_segments(self, c: int) -> tuple:
        d = self.degree
        return ((c - 1) % d, c % d)


def walk(v: VertexFold) -> tuple:
    x = zero_like(v.angles[0])
    xs = [x]
    for j, a in enumerate(v.angles):
        x = x + a if j % 2 == 0 else x - a
        xs.append(x)
    return tuple(xs)


def folded_profile(v: VertexFold, a: MVAssignment | None = None) -> FoldedProfile:
    if a is not None and len(a) != v.degree:
        raise ValueError("assignment length does not match vertex degree")
    prof = FoldedProfile(walk(v), a)
    if v.degree % 2 or not prof.closes:
        raise ValueError("the cross-section does not close: vertex cannot fold flat")
    return prof


def _constraints(prof: FoldedProfile, a: MVAssignment):
    """Precedence requirements and forbidden patterns, all in terms of segment ids.

    Returns ``(order, tortilla, taco)``:
    ``order`` - (upper, lower) pairs forced by crease labels;
    ``tortilla`` - (s, t, u): segment ``u`` must not lie between ``s`` and ``t``;
    ``taco`` - (s, t, u, w): folds {s,t} and {u,w} must not interleave.
    """
    d = prof.degree
    order = []
    folds = []
    for c in range(d):
        s, t = prof.crease_segments(c)
        # segment j faces up for even j; crease c joins s = c-1 to t = c
        s_faces_up = s % 2 == 0
        if (a.labels[c] is Label.M) == s_faces_up:
            order.append((s, t))
        else:
            order.append((t, s))
        x = prof.crease_position(c)
        lo, hi = prof.segment(s)
        side = -1 if hi == x else 1
        folds.append((s, t, x, side))
    tortilla = []
    for s, t, x, _ in folds:
        for u in range(d):
            if u in (s, t):
                continue
            lo, hi = prof.segment(u)
            if lo < x < hi:
                tortilla.append((s, t, u))
    taco = []
    for i in range(d):
        for j in range(i + 1, d):
            s, t, x, side = folds[i]
            u, w, y, side2 = folds[j]
            if x == y and side == side2 and len({s, t, u, w}) == 4:
                taco.append((s, t, u, w))
    return order, tortilla, taco


def _between(level, u, s, t) -> bool:
    return min(level[s], level[t]) < level[u] < max(level[s], level[t])


def find_layer_order(v: VertexFold, a: MVAssignment):
    """A stacking (segment -> height, 0 = bottom) witnessing validity, or ``None``."""
    prof = folded_profile(v, a)
    d = prof.degree
    order, tortilla, taco = _constraints(prof, a)
    # constraint lists keyed by the last segment (in chain order) they mention
    by_last = {j: [] for j in range(d)}
    for s, t in order:
        by_last[max(s, t)].append(("order", (s, t)))
    for tri in tortilla:
        by_last[max(tri)].append(("tortilla", tri))
    for quad in taco:
        by_last[max(quad)].append(("taco", quad))

    def ok(level, j) -> bool:
        for kind, args in by_last[j]:
            if kind == "order":
                upper, lower = args
                if not level[upper] > level[lower]:
                    return False
            elif kind == "tortilla":
                s, t, u = args
                if _between(level, u, s, t):
                    return False
            else:
                s, t, u, w = args
                if _between(level, u, s, t) != _between(level, w, s, t):
                    return False
        return True

    stack = []  # segment ids, bottom to top

    def place(j):
        if j == d:
            return True
        for pos in range(len(stack) + 1):
            stack.insert(pos, j)
            level = {seg: h for h, seg in enumerate(stack)}
            if ok(level, j) and place(j + 1):
                return True
            stack.pop(pos)
        return False

    if place(0):
        return {seg: h for h, seg in enumerate(stack)}
    return None


def oracle_is_valid(v: VertexFold, a: MVAssignment) -> bool:
    return find_layer_order(v, a) is not None


def oracle_count(v: VertexFold, cap: int = DEFAULT_ORACLE_CAP) -> int:
    if v.degree > cap:
        raise OracleCapExceeded(f"degree {v.degree} exceeds oracle cap {cap}")
    if v.degree % 2 or not folded_profile_closes(v):
        return 0
    total = 0
    for labels in product((Label.M, Label.V), repeat=v.degree):
        if oracle_is_valid(v, MVAssignment(labels)):
            total += 1
    return total


def folded_profile_closes(v: VertexFold) -> bool:
    xs = walk(v)
    return v.degree % 2 == 0 and xs[-1] == xs[0]


def discrepancy_report(v: VertexFold, a: MVAssignment) -> str:
    """Everything needed to adjudicate a disagreement between oracle and recursion by hand."""
    from .enumeration import explain_assignment

    prof = folded_profile(v, a)
    order, tortilla, taco = _constraints(prof, a)
    verdict = explain_assignment(v, a)
    lines = [
        f"vertex {','.join(format_angle(x) for x in v.angles)}  assignment {a}",
        "positions " + " ".join(format_angle(x) for x in prof.positions),
        f"oracle: {'valid' if oracle_is_valid(v, a) else 'invalid'}  layer order {find_layer_order(v, a)}",
        f"recursion: {'valid' if verdict.valid else 'invalid: ' + verdict.reason}",
    ]
    for st in verdict.steps:
        lines.append(f"  {st.run}: M - V = {st.required_difference}, fused label {st.fused_crease_label}")
    lines.append("above/below " + " ".join(f"{u}>{l}" for u, l in order))
    lines.append("no-between " + " ".join(f"{u}!in({s},{t})" for s, t, u in tortilla))
    lines.append("no-interleave " + " ".join(f"{{{s},{t}}}x{{{u},{w}}}" for s, t, u, w in taco))
    return "\n".join(lines)
