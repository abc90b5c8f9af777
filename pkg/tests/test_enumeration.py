from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, settings

from conftest import kawasaki_vertices
from flatfold.counting import count_assignments
from flatfold.enumeration import enumerate_valid, explain_assignment, is_valid_assignment, run_constraint_check
from flatfold.vertex import Label, MVAssignment, Run, maekawa_holds, parse_vertex


def names(v):
    return [str(a) for a in enumerate_valid(v)]


def test_enumerate_small():
    assert names(parse_vertex("180,180")) == ["MM", "VV"]
    assert names(parse_vertex("90,90,90,90")) == [
        "MMMV", "MMVM", "MVMM", "MVVV", "VMMM", "VMVV", "VVMV", "VVVM"]
    assert names(parse_vertex("100,80,90,90")) == []


def test_enumerate_square_twist_vertex():
    assert names(parse_vertex("90,45,90,135")) == ["MMVM", "MVMM", "VMVV", "VVMV"]


def test_check_examples():
    v = parse_vertex("90,45,90,135")
    assert explain_assignment(v, MVAssignment.parse("MVMM")).valid
    bad = explain_assignment(v, MVAssignment.parse("MMMV"))
    assert not bad.valid
    assert str(bad.failed_run) == "run(i=2, k=0)"
    flat = explain_assignment(parse_vertex("90,90,90,90"), MVAssignment.parse("MVMV"))
    assert not flat.valid and flat.failed_run is None
    with pytest.raises(ValueError):
        explain_assignment(v, MVAssignment.parse("MVM"))


def test_fused_label_recorded():
    v = parse_vertex("50,50,60,60,60,60")
    verdict = explain_assignment(v, MVAssignment.parse("MVMMMV"))
    assert verdict.valid
    assert verdict.steps[0].fused_crease_label is Label.M


def test_run_constraint_check():
    a = MVAssignment.parse("MVMMMV")
    assert run_constraint_check(Run(0, 0, 6), a)
    assert not run_constraint_check(Run(2, 0, 6), a)
    assert run_constraint_check(Run(0, 1, 6), a)


@settings(max_examples=80)
@given(kawasaki_vertices(5))
def test_enumeration_properties(v):
    found = enumerate_valid(v)
    strs = [str(a) for a in found]
    assert len(found) == count_assignments(v).count
    assert strs == sorted(set(strs))
    assert {str(a.flipped()) for a in found} == set(strs)
    assert all(maekawa_holds(a) for a in found)


@settings(max_examples=40)
@given(kawasaki_vertices(4))
def test_enumeration_matches_checker(v):
    found = {str(a) for a in enumerate_valid(v)}
    for labels in product((Label.M, Label.V), repeat=v.degree):
        a = MVAssignment(labels)
        assert is_valid_assignment(v, a) == (str(a) in found)


@settings(max_examples=40)
@given(kawasaki_vertices(5))
def test_validity_rotates_with_vertex(v):
    for a in enumerate_valid(v):
        assert is_valid_assignment(v.rotated(1), a.rotated(1))
        rev = MVAssignment(tuple(reversed(a.labels))).rotated(-1)
        assert is_valid_assignment(v.reflected(), rev)
