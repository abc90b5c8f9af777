from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from conftest import kawasaki_vertices
from flatfold.counting import count_assignments
from flatfold.enumeration import is_valid_assignment
from flatfold.oracle import (
    OracleCapExceeded,
    discrepancy_report,
    find_layer_order,
    folded_profile,
    oracle_count,
    oracle_is_valid,
)
from flatfold.vertex import Label, MVAssignment, parse_vertex


def test_profile_positions():
    assert folded_profile(parse_vertex("90,90,90,90")).positions == (0, 90, 0, 90, 0)
    prof = folded_profile(parse_vertex("100,70,50,80"))
    assert prof.positions == (0, 100, 30, 80, 0)
    assert prof.segment(1) == (30, 100)
    assert prof.crease_segments(0) == (3, 0)
    with pytest.raises(ValueError):
        folded_profile(parse_vertex("100,80,90,90"))


def test_oracle_verdicts():
    v = parse_vertex("90,45,90,135")
    assert oracle_is_valid(v, MVAssignment.parse("MVMM"))
    assert not oracle_is_valid(v, MVAssignment.parse("MMMV"))
    assert not oracle_is_valid(parse_vertex("180,180"), MVAssignment.parse("MV"))
    assert oracle_is_valid(parse_vertex("180,180"), MVAssignment.parse("VV"))


def test_layer_order_is_a_permutation():
    v = parse_vertex("100,70,50,40,30,70")
    level = find_layer_order(v, MVAssignment.parse("MMMVMM"))
    assert level is None or sorted(level.values()) == list(range(6))
    for a in ("MMMMVV", "VVMMMM"):
        lv = find_layer_order(v, MVAssignment.parse(a))
        if lv is not None:
            assert sorted(lv.values()) == list(range(6))


@pytest.mark.parametrize("text,expected", [
    ("90,90,90,90", 8), ("120,60,60,120", 6), ("90,45,90,135", 4),
    ("100,70,50,40,30,70", 8), ("20,10,40,50,60,60,60,60", 48), ("100,80,90,90", 0),
])
def test_oracle_counts(text, expected):
    assert oracle_count(parse_vertex(text)) == expected


def test_oracle_cap():
    with pytest.raises(OracleCapExceeded):
        oracle_count(parse_vertex("36,36,36,36,36,36,36,36,36,36"))
    assert oracle_count(parse_vertex("36,36,36,36,36,36,36,36,36,36"), cap=10) == 2 * 210


def test_discrepancy_report_mentions_everything():
    text = discrepancy_report(parse_vertex("90,45,90,135"), MVAssignment.parse("MMMV"))
    assert "positions 0 90 45 135 0" in text
    assert "run(i=2, k=0)" in text
    assert "oracle: invalid" in text


@settings(max_examples=40, deadline=None)
@given(kawasaki_vertices(4))
def test_oracle_agrees_with_recursion(v):
    for labels in product((Label.M, Label.V), repeat=v.degree):
        a = MVAssignment(labels)
        assert oracle_is_valid(v, a) == is_valid_assignment(v, a), discrepancy_report(v, a)


@settings(max_examples=25, deadline=None)
@given(kawasaki_vertices(4))
def test_oracle_flip_invariance(v):
    for labels in product((Label.M, Label.V), repeat=v.degree):
        a = MVAssignment(labels)
        assert oracle_is_valid(v, a) == oracle_is_valid(v, a.flipped())
    assert oracle_count(v) == count_assignments(v).count
