"""Exact number of valid mountain-valley assignments of a flat vertex fold."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .vertex import ALL_EQUAL, Run, VertexFold, crimp_reduce, kawasaki_holds, minimal_run


def run_factor(k: int) -> int:
    """Number of ways to label the ``k + 2`` creases bordering a run.

    Odd ``k`` counts one orientation only; the other is carried by the fused crease.
    """
    if k % 2 == 0:
        return comb(k + 2, (k + 2) // 2)
    return comb(k + 2, (k + 1) // 2)


def all_equal_count(degree: int) -> int:
    """Labelings of ``degree`` creases around equal angles: any with M - V = +-2."""
    return 2 * comb(degree, degree // 2 - 1)


@dataclass(frozen=True)
class TraceStep:
    step: object  # Run or ALL_EQUAL
    factor: int
    vertex: VertexFold


@dataclass(frozen=True)
class CountResult:
    count: int
    reduction_trace: tuple = field(default=())

    def __int__(self):
        return self.count


def count_assignments(v: VertexFold) -> CountResult:
    if not kawasaki_holds(v):
        return CountResult(0, ())
    trace = []
    total = 1
    while True:
        r = minimal_run(v)
        if r is ALL_EQUAL:
            f = all_equal_count(v.degree)
            trace.append(TraceStep(ALL_EQUAL, f, v))
            total *= f
            return CountResult(total, tuple(trace))
        f = run_factor(r.k)
        trace.append(TraceStep(r, f, v))
        total *= f
        v = crimp_reduce(v, r)


def bounds(v: VertexFold) -> tuple[int, int]:
    """Sharp lower and upper bounds ``(2**n, 2 * C(2n, n - 1))`` for degree ``2n``."""
    if not kawasaki_holds(v):
        raise ValueError("bounds are only defined for vertices that fold flat")
    n = v.degree // 2
    return 2**n, 2 * comb(2 * n, n - 1)


def is_generic(v: VertexFold) -> bool:
    """Every reduction step crimps a lone minimal angle, ending at two creases."""
    if not kawasaki_holds(v):
        raise ValueError("genericity is only defined for vertices that fold flat")
    trace = count_assignments(v).reduction_trace
    for st in trace[:-1]:
        if st.step.k != 0:
            return False
    return trace[-1].vertex.degree == 2


def format_trace(result: CountResult) -> list[str]:
    """One line per reduction, in the style ``C(100,70,50,80) = 2 * C(...)``."""
    from .angles import format_angle

    lines = []
    for st in result.reduction_trace:
        args = ",".join(format_angle(a) for a in st.vertex.angles)
        if st.step is ALL_EQUAL:
            lines.append(f"C({args}) = {st.factor}  [all equal, degree {st.vertex.degree}]")
        else:
            r: Run = st.step
            lines.append(f"C({args}) = {st.factor} * C(...)  [{r}]")
    lines.append(f"total = {result.count}")
    return lines
