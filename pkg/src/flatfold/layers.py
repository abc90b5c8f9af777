"""Global flat-foldability of small crease patterns by layer-order search.

Every pair of faces whose folded images overlap with positive area gets one
boolean, "f lies above g".  The rules a flat folded state must obey become
clauses over those booleans:

* crease labels fix the order of the two faces they join;
* a face crossing a folded crease may not sit between that crease's faces
  (taco-tortilla);
* two folds along overlapping collinear segments opening to the same side must
  nest or be disjoint (taco-taco);
* faces sharing a common region stack transitively.

A small DPLL solver decides the clause set.  Counting enumerates crease labels
with the single-vertex filter and clause propagation pruning early.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .geometry import clip_convex, dot, line_crossing_interval, orient, overlap_area2, signed_area2, sub
from .pattern import CreasePattern, induced_labels, local_filter
from .enumeration import is_valid_assignment
from .vertex import Label

DEFAULT_FACE_CAP = 24
DEFAULT_CREASE_CAP = 24


class PatternCapExceeded(ValueError):
    pass


# -- a small DPLL ------------------------------------------------------------


class Clauses:
    """CNF over variables ``1..nvars`` with a persistent partial assignment."""

    def __init__(self, nvars: int, clauses: list):
        self.nvars = nvars
        self.clauses = [tuple(c) for c in clauses]
        self.occ = {}
        for ci, c in enumerate(self.clauses):
            for lit in c:
                self.occ.setdefault(lit, []).append(ci)
        self.value = [0] * (nvars + 1)
        self.trail = []

    def mark(self) -> int:
        return len(self.trail)

    def undo(self, mark: int):
        while len(self.trail) > mark:
            self.value[abs(self.trail.pop())] = 0

    def lit_value(self, lit: int) -> int:
        v = self.value[abs(lit)]
        return v if lit > 0 else -v

    def assume(self, lit: int) -> bool:
        """Set ``lit`` true and unit-propagate; False on conflict (caller undoes)."""
        cur = self.lit_value(lit)
        if cur:
            return cur > 0
        self._set(lit)
        return self._propagate([lit])

    def _set(self, lit):
        self.value[abs(lit)] = 1 if lit > 0 else -1
        self.trail.append(lit)

    def _propagate(self, queue) -> bool:
        value = self.value
        while queue:
            lit = queue.pop()
            for ci in self.occ.get(-lit, ()):
                free = None
                nfree = 0
                for l in self.clauses[ci]:
                    v = value[abs(l)]
                    if v == 0:
                        nfree += 1
                        free = l
                    elif (v > 0) == (l > 0):
                        break
                else:
                    if nfree == 0:
                        return False
                    if nfree == 1:
                        self._set(free)
                        queue.append(free)
        return True

    def solve(self) -> bool:
        """Extend the current assignment to a model; the model is left in place on success."""
        if not self._propagate_all():
            return False
        return self._search()

    def _propagate_all(self) -> bool:
        for c in self.clauses:
            free = [l for l in c if self.value[abs(l)] == 0]
            if any(self.lit_value(l) > 0 for l in c):
                continue
            if not free:
                return False
            if len(free) == 1:
                self._set(free[0])
                if not self._propagate([free[0]]):
                    return False
        return True

    def _search(self) -> bool:
        var = next((v for v in range(1, self.nvars + 1) if self.value[v] == 0), None)
        if var is None:
            return True
        for lit in (var, -var):
            m = self.mark()
            if self.assume(lit) and self._search():
                return True
            self.undo(m)
        return False


# -- folded state ------------------------------------------------------------


@dataclass(frozen=True)
class Fold:
    crease: int
    faces: tuple  # (left, right)
    segment: tuple  # folded endpoints
    side: int  # which side of the folded line the two faces lie on


class FoldedState:
    """Folded geometry of a pattern plus the assignment-independent layer clauses."""

    def __init__(self, cp: CreasePattern, face_cap: int = DEFAULT_FACE_CAP):
        nf = len(cp.faces)
        if nf > face_cap:
            raise PatternCapExceeded(f"{nf} faces exceeds face cap {face_cap}")
        self.pattern = cp
        self.consistent = cp.maps_consistent
        self.face_maps = cp.face_maps
        polys = []
        for f in range(nf):
            img = [cp.face_maps[f](p) for p in cp.face_polygon(f)]
            if signed_area2(img) < 0:
                img.reverse()
            polys.append(img)
        self.faces = tuple(tuple(p) for p in polys)
        self.overlap_pairs = tuple(
            (f, g) for f, g in combinations(range(nf), 2) if overlap_area2(polys[f], polys[g]) > 0
        )
        self._var = {pair: k + 1 for k, pair in enumerate(self.overlap_pairs)}
        self.folds = tuple(self._fold(c) for c in range(len(cp.creases)))
        self.base_clauses = self._clauses(polys)

    def _fold(self, cid: int) -> Fold:
        cp = self.pattern
        l, r = cp.crease_faces[cid]
        i, j = cp.creases[cid]
        P, Q = cp.face_maps[l](cp.points[i]), cp.face_maps[l](cp.points[j])
        poly = self.faces_of(l)
        cx = sum(p[0] for p in poly) / len(poly)
        cy = sum(p[1] for p in poly) / len(poly)
        side = 1 if orient(P, Q, (cx, cy)) > 0 else -1
        return Fold(cid, (l, r), (P, Q), side)

    def faces_of(self, f):
        return self.faces[f]

    def above(self, f: int, g: int) -> int:
        """Literal meaning "face f lies above face g"."""
        if f < g:
            return self._var[f, g]
        return -self._var[g, f]

    def crease_literal(self, cid: int, label: Label) -> int:
        l, r = self.folds[cid].faces
        # viewed from the root face's top side, a mountain sends the far face below
        if (label is Label.M) == self.pattern.face_up(l):
            return self.above(l, r)
        return self.above(r, l)

    def _clauses(self, polys) -> list:
        clauses = []
        nf = len(polys)
        overlapping = set(self.overlap_pairs)
        # taco-tortilla
        for fold in self.folds:
            a, b = fold.faces
            P, Q = fold.segment
            for t in range(nf):
                if t in (a, b):
                    continue
                span = line_crossing_interval(list(polys[t]), P, Q)
                if span is None or max(span[0], 0) >= min(span[1], 1):
                    continue
                x, y = self.above(a, t), self.above(b, t)
                clauses += [(-x, y), (x, -y)]
        # taco-taco
        for f1, f2 in combinations(self.folds, 2):
            if len(set(f1.faces) | set(f2.faces)) < 4:
                continue
            P, Q = f1.segment
            R, S = f2.segment
            if orient(P, Q, R) != 0 or orient(P, Q, S) != 0:
                continue
            d = sub(Q, P)
            lo1, hi1 = 0, dot(d, d)
            t1, t2 = dot(sub(R, P), d), dot(sub(S, P), d)
            if max(lo1, min(t1, t2)) >= min(hi1, max(t1, t2)):
                continue
            l2 = f2.faces[0]
            poly = polys[l2]
            cx = sum(p[0] for p in poly) / len(poly)
            cy = sum(p[1] for p in poly) / len(poly)
            side2 = 1 if orient(P, Q, (cx, cy)) > 0 else -1
            if side2 != f1.side:
                continue
            a, b = f1.faces
            c, e = f2.faces
            lits = (self.above(a, c), self.above(b, c), self.above(a, e), self.above(b, e))
            for bits in product((False, True), repeat=4):
                if sum(bits) % 2 == 1:
                    clauses.append(tuple(-l if bit else l for l, bit in zip(lits, bits)))
        # transitivity where three faces share a region
        for f, g, h in combinations(range(nf), 3):
            if (f, g) not in overlapping or (g, h) not in overlapping or (f, h) not in overlapping:
                continue
            common = clip_convex(clip_convex(list(polys[f]), list(polys[g])), list(polys[h]))
            if len(common) < 3 or signed_area2(common) <= 0:
                continue
            x, y, z = self.above(f, g), self.above(g, h), self.above(h, f)
            clauses += [(-x, -y, -z), (x, y, z)]
        return clauses

    def solver(self) -> Clauses:
        return Clauses(len(self.overlap_pairs), self.base_clauses)

    def layer_order(self, labels):
        """Pairwise stacking ``{(f, g): True if f above g}`` for a full assignment, or None."""
        if not self.consistent:
            return None
        s = self.solver()
        for cid, lab in enumerate(labels):
            if not s.assume(self.crease_literal(cid, lab)):
                return None
        if not s.solve():
            return None
        return {pair: s.value[self._var[pair]] > 0 for pair in self.overlap_pairs}


def folded_state(cp: CreasePattern, face_cap: int = DEFAULT_FACE_CAP) -> FoldedState:
    return FoldedState(cp, face_cap)


def global_is_valid(cp: CreasePattern, labels, face_cap: int = DEFAULT_FACE_CAP, state=None) -> bool:
    if len(labels) != len(cp.creases) or any(l is None for l in labels):
        raise ValueError("a full M/V label per crease is required")
    state = state or folded_state(cp, face_cap)
    return state.layer_order(labels) is not None


def _crease_order(cp: CreasePattern) -> list:
    """Creases grouped vertex by vertex so local checks fire as early as possible."""
    order, seen = [], set()
    for iv in cp.induced_vertices:
        for c in iv.creases:
            if c not in seen:
                seen.add(c)
                order.append(c)
    order += [c for c in range(len(cp.creases)) if c not in seen]
    return order


def iter_valid(cp: CreasePattern, partial=None, crease_cap: int = DEFAULT_CREASE_CAP,
               face_cap: int = DEFAULT_FACE_CAP):
    """Yield every globally valid full assignment (tuple of labels) extending ``partial``."""
    n = len(cp.creases)
    if n > crease_cap:
        raise PatternCapExceeded(f"{n} creases exceeds crease cap {crease_cap}")
    state = folded_state(cp, face_cap)
    if not state.consistent:
        return
    partial = tuple(partial) if partial is not None else (None,) * n
    order = _crease_order(cp)
    pos = {c: k for k, c in enumerate(order)}
    # vertices become checkable once their last crease (in search order) is set
    ready = {}
    for iv in cp.induced_vertices:
        last = max(pos[c] for c in iv.creases)
        ready.setdefault(last, []).append(iv)
    solver = state.solver()
    if not solver._propagate_all():
        return
    labels = [None] * n

    def rec(k):
        if k == n:
            m = solver.mark()
            ok = solver.solve()
            solver.undo(m)
            if ok:
                yield tuple(labels)
            return
        cid = order[k]
        choices = (partial[cid],) if partial[cid] is not None else (Label.M, Label.V)
        for lab in choices:
            labels[cid] = lab
            if all(is_valid_assignment(iv.fold, induced_labels(iv, labels)) for iv in ready.get(k, ())):
                m = solver.mark()
                if solver.assume(state.crease_literal(cid, lab)):
                    yield from rec(k + 1)
                solver.undo(m)
            labels[cid] = None

    yield from rec(0)


def count_pattern(cp: CreasePattern, partial=None, crease_cap: int = DEFAULT_CREASE_CAP,
                  face_cap: int = DEFAULT_FACE_CAP) -> int:
    return sum(1 for _ in iter_valid(cp, partial, crease_cap, face_cap))


def iter_locally_valid(cp: CreasePattern):
    """Every assignment passing the per-vertex filter (no global reasoning)."""
    n = len(cp.creases)
    order = _crease_order(cp)
    pos = {c: k for k, c in enumerate(order)}
    ready = {}
    for iv in cp.induced_vertices:
        ready.setdefault(max(pos[c] for c in iv.creases), []).append(iv)
    labels = [None] * n

    def rec(k):
        if k == n:
            yield tuple(labels)
            return
        cid = order[k]
        for lab in (Label.M, Label.V):
            labels[cid] = lab
            if all(is_valid_assignment(iv.fold, induced_labels(iv, labels)) for iv in ready.get(k, ())):
                yield from rec(k + 1)
        labels[cid] = None

    yield from rec(0)
