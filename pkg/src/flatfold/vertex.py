"""Single-vertex crease patterns: representation, local predicates, crimp reduction.

Indexing is 0-based throughout the code; angle ``angles[j]`` lies between
crease ``j`` and crease ``j + 1`` (mod the degree).  Human-facing output (CLI,
``Run.start_1``) uses 1-based crease numbers.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from operator import add
from typing import Sequence

from .angles import FULL_TURN_DEGREES, Angle, full_turn, parse_rational, zero_like


class ParseError(ValueError):
    """Base class for rejected angle-list or assignment text."""


class MalformedToken(ParseError):
    pass


class NonPositiveAngle(ParseError):
    pass


class AngleSumTooLarge(ParseError):
    pass


class PaperKind(enum.Enum):
    FLAT_SHEET = "flat"
    CONE = "cone"


@dataclass(frozen=True)
class VertexFold:
    """Circular sequence of positive angles around one interior vertex."""

    angles: tuple
    kind: PaperKind

    @classmethod
    def from_angles(cls, angles: Sequence[Angle]) -> "VertexFold":
        angles = tuple(angles)
        if len(angles) < 2:
            raise ValueError("a vertex needs at least two creases")
        zero = zero_like(angles[0])
        if any(not a > zero for a in angles):
            raise NonPositiveAngle("angles must be positive")
        total = reduce(add, angles)
        full = full_turn(angles[0])
        if total > full:
            raise AngleSumTooLarge("angles sum to more than a full turn")
        kind = PaperKind.FLAT_SHEET if total == full else PaperKind.CONE
        return cls(angles, kind)

    @property
    def degree(self) -> int:
        return len(self.angles)

    def angle(self, j: int) -> Angle:
        return self.angles[j % len(self.angles)]

    def rotated(self, shift: int) -> "VertexFold":
        """Relabel so that old crease ``shift`` becomes crease 0."""
        s = shift % self.degree
        return VertexFold(self.angles[s:] + self.angles[:s], self.kind)

    def reflected(self) -> "VertexFold":
        """Mirror image, up to rotation."""
        return VertexFold(tuple(reversed(self.angles)), self.kind)


def parse_vertex(text: str) -> VertexFold:
    tokens = text.split(",")
    angles = []
    for tok in tokens:
        try:
            angles.append(parse_rational(tok))
        except ValueError as exc:
            raise MalformedToken(str(exc)) from None
    if not angles:
        raise MalformedToken("empty angle list")
    if any(a <= 0 for a in angles):
        raise NonPositiveAngle(f"non-positive angle in {text!r}")
    if sum(angles) > FULL_TURN_DEGREES:
        raise AngleSumTooLarge(f"angles in {text!r} sum to {sum(angles)} > 360")
    if len(angles) < 2:
        raise MalformedToken("a vertex needs at least two angles")
    return VertexFold.from_angles(angles)


class Label(str, enum.Enum):
    M = "M"
    V = "V"

    def flipped(self) -> "Label":
        return Label.V if self is Label.M else Label.M


@dataclass(frozen=True)
class MVAssignment:
    labels: tuple

    @classmethod
    def parse(cls, text: str) -> "MVAssignment":
        text = text.strip().upper()
        if not text or any(ch not in "MV" for ch in text):
            raise MalformedToken(f"assignment must be a nonempty string over M/V: {text!r}")
        return cls(tuple(Label(ch) for ch in text))

    def __len__(self):
        return len(self.labels)

    def __str__(self):
        return "".join(l.value for l in self.labels)

    @property
    def mountains(self) -> int:
        return sum(1 for l in self.labels if l is Label.M)

    @property
    def valleys(self) -> int:
        return len(self.labels) - self.mountains

    def flipped(self) -> "MVAssignment":
        return MVAssignment(tuple(l.flipped() for l in self.labels))

    def rotated(self, shift: int) -> "MVAssignment":
        s = shift % len(self.labels)
        return MVAssignment(self.labels[s:] + self.labels[:s])


def kawasaki_holds(v: VertexFold) -> bool:
    """Alternating angle sum is exactly zero (odd degree never folds flat)."""
    if v.degree % 2:
        return False
    odd = reduce(add, v.angles[0::2])
    even = reduce(add, v.angles[1::2])
    return odd == even


def maekawa_holds(a: MVAssignment) -> bool:
    return abs(a.mountains - a.valleys) == 2


def points_up(a: MVAssignment) -> bool:
    if not maekawa_holds(a):
        raise ValueError(f"{a} has M - V = {a.mountains - a.valleys}, not +-2")
    return a.mountains - a.valleys == 2


@dataclass(frozen=True)
class Run:
    """Maximal block of equal minimal angles ``start .. start+k`` with strictly larger neighbors.

    The run constrains its ``k + 2`` bordering creases ``start .. start+k+1``.
    """

    start: int
    k: int
    degree: int

    @property
    def start_1(self) -> int:
        return self.start + 1

    @property
    def bordering_creases(self) -> tuple:
        return tuple((self.start + t) % self.degree for t in range(self.k + 2))

    @property
    def angle_indices(self) -> tuple:
        return tuple((self.start + t) % self.degree for t in range(self.k + 1))

    def __str__(self):
        return f"run(i={self.start_1}, k={self.k})"


class AllEqual:
    """Marker returned by :func:`minimal_run` when every angle is the same."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AllEqual"

    __str__ = __repr__


ALL_EQUAL = AllEqual()


def minimal_runs(v: VertexFold) -> list:
    """Every maximal run of the minimum angle, ordered by start index."""
    d = v.degree
    low = min(v.angles)
    if all(a == low for a in v.angles):
        return []
    runs = []
    for i in range(d):
        if v.angles[i] == low and v.angle(i - 1) != low:
            k = 0
            while v.angle(i + k + 1) == low:
                k += 1
            runs.append(Run(i, k, d))
    return runs


def minimal_run(v: VertexFold):
    runs = minimal_runs(v)
    return runs[0] if runs else ALL_EQUAL


def crimp_reduce_tracked(v: VertexFold, r: Run, creases: Sequence | None = None):
    """Crimp away ``r``; return the smaller vertex and the crease ids it keeps.

    ``creases`` names the creases of ``v`` (defaults to ``0..d-1``).  For even
    ``k`` all bordering creases vanish.  For odd ``k`` they fuse into a single
    crease, reported as the tuple of the fused ids.
    """
    d = v.degree
    if creases is None:
        creases = tuple(range(d))
    border = set(r.bordering_creases)
    i, k = r.start, r.k
    new_angles, new_creases = [], []
    if k % 2 == 0:
        prev = (i - 1) % d
        merged = v.angle(i - 1) - v.angle(i) + v.angle(i + k + 1)
        for c in range(d):
            if c in border:
                continue
            new_creases.append(creases[c])
            new_angles.append(merged if c == prev else v.angles[c])
    else:
        last = (i + k + 1) % d
        fused = tuple(creases[c] for c in r.bordering_creases)
        for c in range(d):
            if c == i:
                new_creases.append(fused)
                new_angles.append(v.angles[last])
            elif c not in border:
                new_creases.append(creases[c])
                new_angles.append(v.angles[c])
    return VertexFold.from_angles(new_angles), tuple(new_creases)


def crimp_reduce(v: VertexFold, r: Run) -> VertexFold:
    return crimp_reduce_tracked(v, r)[0]


def random_kawasaki_vertex(half_degree: int, seed: int) -> VertexFold:
    """Random vertex of degree ``2 * half_degree`` satisfying the alternating-sum condition.

    Small integer draws make ties (equal neighbouring angles) common, which is
    what exercises the run logic.
    """
    if half_degree < 1:
        raise ValueError("half_degree must be >= 1")
    rng = random.Random(seed)
    n = half_degree
    odd = [Fraction(rng.randint(1, 6)) for _ in range(n)]
    even = [Fraction(rng.randint(1, 6)) for _ in range(n)]
    ratio = sum(odd) / sum(even)
    even = [e * ratio for e in even]
    if rng.random() < 0.5:
        total = FULL_TURN_DEGREES
    else:
        total = Fraction(rng.randint(36, 359), rng.choice([1, 1, 2, 3]))
        total = min(total, FULL_TURN_DEGREES)
    scale = total / (sum(odd) + sum(even))
    angles = []
    for a, b in zip(odd, even):
        angles.extend([a * scale, b * scale])
    return VertexFold.from_angles(angles)
