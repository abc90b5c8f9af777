"""Independent stamp-folding model used to cross-check the 2-D layer search.

Every stamp of an m x n sheet lands on the same unit square, so a folded
state is just a stacking order of the stamps.  The order must respect each
crease (for a mountain the face-up stamp of the pair lies above, for a
valley the face-down one) and two folds hinged on the same edge of the pile
must nest or be disjoint.  Nothing here touches the library's geometry.
"""

from __future__ import annotations


def stamp_folds(m: int, n: int):
    """Folds as (crease index, stamp a, stamp b, pile edge) in the library's crease order."""
    def sid(i, j):
        return i * n + j

    folds = []
    for x in range(1, m):
        for j in range(n):
            i = x - 1
            folds.append((sid(i, j), sid(i + 1, j), "R" if i % 2 == 0 else "L"))
    for y in range(1, n):
        for i in range(m):
            j = y - 1
            folds.append((sid(i, j), sid(i, j + 1), "T" if j % 2 == 0 else "B"))
    return folds


def face_up(m: int, n: int, s: int) -> bool:
    i, j = divmod(s, n)
    return (i + j) % 2 == 0


def pile_order(m: int, n: int, labels: str):
    """A bottom-to-top stacking realising ``labels``, or None."""
    folds = stamp_folds(m, n)
    count = m * n
    below = {s: set() for s in range(count)}  # stamps that must lie below s
    for (a, b, _), lab in zip(folds, labels):
        up, down = (a, b) if face_up(m, n, a) else (b, a)
        top, bottom = (up, down) if lab == "M" else (down, up)
        below[top].add(bottom)
    by_edge = {}
    for a, b, edge in folds:
        by_edge.setdefault(edge, []).append((a, b))

    level = {}

    def crossing_free():
        for pairs in by_edge.values():
            spans = [tuple(sorted((level[a], level[b]))) for a, b in pairs if a in level and b in level]
            for p in range(len(spans)):
                for q in range(p + 1, len(spans)):
                    (a, b), (c, d) = spans[p], spans[q]
                    if a < c < b < d or c < a < d < b:
                        return False
        return True

    def place(h):
        if h == count:
            return True
        for s in range(count):
            if s in level or not below[s] <= level.keys():
                continue
            level[s] = h
            if crossing_free() and place(h + 1):
                return True
            del level[s]
        return False

    return dict(level) if place(0) else None
