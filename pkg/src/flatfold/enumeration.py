"""Validity of individual mountain-valley assignments, and full enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .vertex import (
    ALL_EQUAL,
    Label,
    MVAssignment,
    Run,
    VertexFold,
    crimp_reduce_tracked,
    kawasaki_holds,
    minimal_run,
)


@dataclass(frozen=True)
class ReductionStep:
    run: Run
    required_difference: int
    fused_crease_label: Optional[Label] = None


def run_constraint_check(r: Run, a: MVAssignment) -> bool:
    """Mountains minus valleys over the run's bordering creases is 0 (even k) or +-1 (odd k)."""
    diff = sum(1 if a.labels[c] is Label.M else -1 for c in r.bordering_creases)
    return diff == 0 if r.k % 2 == 0 else abs(diff) == 1


@dataclass(frozen=True)
class Verdict:
    valid: bool
    steps: tuple = ()
    reason: str = ""
    failed_run: Optional[Run] = None


def explain_assignment(v: VertexFold, a: MVAssignment) -> Verdict:
    """Replay the reduction on ``a``; report each step and the first failure."""
    if len(a) != v.degree:
        raise ValueError(f"assignment has {len(a)} labels, vertex has degree {v.degree}")
    if not kawasaki_holds(v):
        return Verdict(False, (), "alternating angle sum is not zero")
    labels = list(a.labels)
    steps = []
    while True:
        r = minimal_run(v)
        if r is ALL_EQUAL:
            diff = sum(1 if l is Label.M else -1 for l in labels)
            if abs(diff) != 2:
                return Verdict(False, tuple(steps), f"all-equal base with M - V = {diff}")
            return Verdict(True, tuple(steps))
        local = MVAssignment(tuple(labels))
        diff = sum(1 if labels[c] is Label.M else -1 for c in r.bordering_creases)
        if not run_constraint_check(r, local):
            return Verdict(False, tuple(steps), f"{r} has M - V = {diff}", r)
        fused = None
        if r.k % 2:
            fused = Label.M if diff > 0 else Label.V
        steps.append(ReductionStep(r, diff, fused))
        v, kept = crimp_reduce_tracked(v, r)
        labels = [fused if isinstance(c, tuple) else labels[c] for c in kept]


def is_valid_assignment(v: VertexFold, a: MVAssignment) -> bool:
    return explain_assignment(v, a).valid


def _expand(v: VertexFold, creases: tuple) -> list[dict]:
    """All valid labelings of ``creases`` as dicts; fused creases are tuples of ids."""
    r = minimal_run(v)
    if r is ALL_EQUAL:
        d = v.degree
        out = []
        for major in (Label.M, Label.V):
            for minority in combinations(range(d), d // 2 - 1):
                lab = {creases[c]: major for c in range(d)}
                for c in minority:
                    lab[creases[c]] = major.flipped()
                out.append(lab)
        return out
    reduced, kept = crimp_reduce_tracked(v, r, creases)
    border = [creases[c] for c in r.bordering_creases]
    out = []
    if r.k % 2 == 0:
        half = (r.k + 2) // 2
        for rest in _expand(reduced, kept):
            for valleys in combinations(border, half):
                lab = dict(rest)
                for c in border:
                    lab[c] = Label.V if c in valleys else Label.M
                out.append(lab)
        return out
    fused_id = tuple(border)
    minority_size = (r.k + 1) // 2
    for rest in _expand(reduced, kept):
        major = rest.pop(fused_id)
        for minority in combinations(border, minority_size):
            lab = dict(rest)
            for c in border:
                lab[c] = major.flipped() if c in minority else major
            out.append(lab)
    return out


def enumerate_valid(v: VertexFold) -> list[MVAssignment]:
    """Valid assignments in lexicographic order (M before V), each exactly once."""
    if not kawasaki_holds(v):
        return []
    found = _expand(v, tuple(range(v.degree)))
    result = [MVAssignment(tuple(lab[c] for c in range(v.degree))) for lab in found]
    result.sort(key=str)
    return result
