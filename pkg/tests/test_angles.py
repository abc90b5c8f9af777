from __future__ import annotations

from fractions import Fraction

import pytest

from flatfold.angles import PlanarAngle, format_angle, full_turn, parse_rational, zero_like


def test_parse_rational_forms():
    assert parse_rational("90") == 90
    assert parse_rational(" 45/2 ") == Fraction(45, 2)
    assert parse_rational("22.5") == Fraction(45, 2)


@pytest.mark.parametrize("bad", ["", "abc", "1e3", "1/0", "nan", "inf"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_format_angle():
    assert format_angle(Fraction(90)) == "90"
    assert format_angle(Fraction(45, 2)) == "45/2"


def test_planar_angle_right_angle():
    quarter = PlanarAngle.between((1, 0), (0, 1))
    assert abs(quarter.degrees() - 90) < 1e-12
    assert quarter + quarter + quarter + quarter == PlanarAngle.full()
    assert quarter + quarter == PlanarAngle.between((1, 0), (-1, 0))


def test_planar_angle_order_and_difference():
    a = PlanarAngle.between((1, 0), (4, 3))
    b = PlanarAngle.between((1, 0), (3, 4))
    assert a < b
    assert b - a == PlanarAngle.between((4, 3), (3, 4))
    assert (b - a) + a == b
    assert -(-a) == a


def test_planar_angle_alternating_sum_exact():
    # 90, 45, 90, 135
    dirs = [(1, 0), (0, 1), (-1, 1), (-1, -1)]
    angles = [PlanarAngle.between(dirs[i], dirs[(i + 1) % 4]) for i in range(4)]
    total = angles[0] + angles[1] + angles[2] + angles[3]
    assert total == PlanarAngle.full()
    assert angles[0] - angles[1] + angles[2] - angles[3] == PlanarAngle.zero()


def test_full_turn_dispatch():
    assert full_turn(Fraction(3)) == 360
    assert full_turn(3) == 360
    assert full_turn(PlanarAngle.zero()) == PlanarAngle.full()
    assert zero_like(Fraction(5)) == 0
