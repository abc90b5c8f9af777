from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import kawasaki_vertices
from flatfold.counting import all_equal_count, bounds, count_assignments, format_trace, is_generic, run_factor
from flatfold.vertex import ALL_EQUAL, crimp_reduce, minimal_run, minimal_runs, parse_vertex

ANCHORS = {
    "90,90,90,90": 8,
    "120,60,60,120": 6,
    "90,45,90,135": 4,
    "100,70,50,40,30,70": 8,
    "20,10,40,50,60,60,60,60": 48,
}


@pytest.mark.parametrize("text,expected", ANCHORS.items())
def test_anchor_counts(text, expected):
    assert count_assignments(parse_vertex(text)).count == expected


def test_degenerate_counts():
    assert count_assignments(parse_vertex("180,180")).count == 2
    assert count_assignments(parse_vertex("100,80,90,90")).count == 0


def test_factors():
    assert [run_factor(k) for k in range(5)] == [2, 3, 6, 10, 20]
    assert all_equal_count(4) == 8
    assert all_equal_count(8) == 112
    assert all_equal_count(2) == 2


def test_trace_example_chain():
    res = count_assignments(parse_vertex("100,70,50,40,30,70"))
    assert [t.factor for t in res.reduction_trace] == [2, 2, 2]
    assert [t.vertex.angles for t in res.reduction_trace] == [
        (100, 70, 50, 40, 30, 70), (100, 70, 50, 80), (100, 100)]
    assert res.reduction_trace[-1].step is ALL_EQUAL
    assert format_trace(res)[-1] == "total = 8"


def test_trace_example_two():
    res = count_assignments(parse_vertex("20,10,40,50,60,60,60,60"))
    assert [t.factor for t in res.reduction_trace] == [2, 3, 8]


def test_bounds():
    assert bounds(parse_vertex("90,90,90,90")) == (4, 8)
    assert bounds(parse_vertex("20,10,40,50,60,60,60,60")) == (16, 112)
    with pytest.raises(ValueError):
        bounds(parse_vertex("100,80,90,90"))


def test_generic():
    assert is_generic(parse_vertex("100,70,50,40,30,70"))
    assert not is_generic(parse_vertex("90,90,90,90"))
    assert not is_generic(parse_vertex("20,10,40,50,60,60,60,60"))


@given(kawasaki_vertices(8))
def test_count_within_bounds_and_even(v):
    c = count_assignments(v).count
    n = v.degree // 2
    assert c % 2 == 0
    assert 2 ** n <= c <= 2 * comb(2 * n, n - 1)
    if is_generic(v):
        assert c == 2 ** n


@given(kawasaki_vertices(6), st.integers(0, 11))
def test_count_invariant_under_symmetry(v, shift):
    c = count_assignments(v).count
    assert count_assignments(v.rotated(shift)).count == c
    assert count_assignments(v.reflected()).count == c


@settings(max_examples=60)
@given(kawasaki_vertices(6))
def test_run_choice_does_not_matter(v):
    """Reducing any minimal run first gives the same count."""
    runs = minimal_runs(v)
    if len(runs) < 2:
        return
    factors = {run_factor(r.k) * count_assignments(crimp_reduce(v, r)).count for r in runs}
    assert factors == {count_assignments(v).count}


def test_minimal_run_marker_for_all_equal():
    assert minimal_run(parse_vertex("45,45,45,45,45,45,45,45")) is ALL_EQUAL
    assert count_assignments(parse_vertex("45,45,45,45,45,45,45,45")).count == 112
