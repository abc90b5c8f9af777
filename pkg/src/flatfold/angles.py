"""Exact angle values.

Vertex angles typed in by hand are rational numbers of degrees and are held as
:class:`fractions.Fraction`.  Angles measured between creases of a crease
pattern with rational coordinates are generally irrational in degrees, so those
are held as :class:`PlanarAngle`: a whole number of turns plus the direction of
a rational vector.  Both support ``+``, ``-``, ``==``, ``<`` and hashing, which
is all the single-vertex machinery needs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import singledispatch, total_ordering
from typing import Union

FULL_TURN_DEGREES = Fraction(360)


def parse_rational(token: str) -> Fraction:
    """Parse ``"12"``, ``"-3/4"`` or ``"2.5"`` exactly; floats in exponent form are refused."""
    token = token.strip()
    if not token or "e" in token.lower():
        raise ValueError(f"not a rational literal: {token!r}")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {token!r}") from exc


def _half(x: Fraction, y: Fraction) -> int:
    # 0 for arguments in [0, pi), 1 for [pi, 2pi)
    return 0 if (y > 0 or (y == 0 and x > 0)) else 1


def _arg_less(u: tuple, v: tuple) -> bool:
    hu, hv = _half(*u), _half(*v)
    if hu != hv:
        return hu < hv
    return u[0] * v[1] - u[1] * v[0] > 0


def _normalize(x: Fraction, y: Fraction) -> tuple[Fraction, Fraction]:
    scale = abs(x) if x != 0 else abs(y)
    if scale == 0:
        raise ValueError("zero vector has no direction")
    return (Fraction(x) / scale, Fraction(y) / scale)


@total_ordering
class PlanarAngle:
    """The angle ``2*pi*turns + arg(direction)`` with ``arg`` taken in ``[0, 2*pi)``.

    ``direction`` is a rational vector, normalized up to positive scaling, so
    equality and ordering are exact.  Sums map to complex products of the
    direction vectors, with the carry into ``turns`` detected exactly.
    """

    __slots__ = ("turns", "direction")

    def __init__(self, turns: int, direction: tuple):
        self.turns = int(turns)
        self.direction = _normalize(*direction)

    @classmethod
    def between(cls, u: tuple, v: tuple) -> "PlanarAngle":
        """Counterclockwise angle from direction ``u`` to direction ``v``, in ``[0, 2*pi)``."""
        x = u[0] * v[0] + u[1] * v[1]
        y = u[0] * v[1] - u[1] * v[0]
        return cls(0, (x, y))

    @classmethod
    def zero(cls) -> "PlanarAngle":
        return cls(0, (1, 0))

    @classmethod
    def full(cls) -> "PlanarAngle":
        return cls(1, (1, 0))

    def _is_direction_zero(self) -> bool:
        return self.direction[1] == 0 and self.direction[0] > 0

    def __add__(self, other):
        if not isinstance(other, PlanarAngle):
            return NotImplemented
        (a, b), (c, d) = self.direction, other.direction
        product = (a * c - b * d, a * d + b * c)
        carry = 1 if _arg_less(product, self.direction) else 0
        return PlanarAngle(self.turns + other.turns + carry, product)

    def __neg__(self):
        if self._is_direction_zero():
            return PlanarAngle(-self.turns, self.direction)
        x, y = self.direction
        return PlanarAngle(-self.turns - 1, (x, -y))

    def __sub__(self, other):
        if not isinstance(other, PlanarAngle):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, PlanarAngle):
            return NotImplemented
        return self.turns == other.turns and self.direction == other.direction

    def __lt__(self, other):
        if not isinstance(other, PlanarAngle):
            return NotImplemented
        if self.turns != other.turns:
            return self.turns < other.turns
        return _arg_less(self.direction, other.direction)

    def __hash__(self):
        return hash((self.turns, self.direction))

    def degrees(self) -> float:
        x, y = self.direction
        arg = math.degrees(math.atan2(float(y), float(x))) % 360.0
        return 360.0 * self.turns + arg

    def __repr__(self):
        return f"PlanarAngle({self.degrees():.6g} deg)"

    def __str__(self):
        return f"~{self.degrees():.6g}"


Angle = Union[Fraction, PlanarAngle]


@singledispatch
def full_turn(sample) -> Angle:
    """The full turn expressed in the same representation as ``sample``."""
    raise TypeError(f"unsupported angle type {type(sample).__name__}")


@full_turn.register
def _(sample: Fraction) -> Fraction:
    return FULL_TURN_DEGREES


@full_turn.register
def _(sample: int) -> Fraction:
    return FULL_TURN_DEGREES


@full_turn.register
def _(sample: PlanarAngle) -> PlanarAngle:
    return PlanarAngle.full()


def zero_like(sample) -> Angle:
    return full_turn(sample) - full_turn(sample)


def format_angle(a: Angle) -> str:
    if isinstance(a, PlanarAngle):
        return str(a)
    a = Fraction(a)
    return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"
