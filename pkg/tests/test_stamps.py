"""2-D layer search against the independent single-pile stamp model."""

from __future__ import annotations

import pytest

from flatfold.layers import global_is_valid, iter_locally_valid, iter_valid
from flatfold.pattern import StampGrid, format_labels, local_filter, parse_labels, stamp_grid
from stamp_model import pile_order, stamp_folds

PINWHEELS = ["VMMMMVMMVVMM", "MMVVMMVMMMMV", "VVMMVVMVVVVM", "MVVVVMVVMMVV"]


@pytest.mark.parametrize("m,n", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5)])
def test_layer_search_matches_pile_model(m, n):
    cp = stamp_grid(StampGrid(m, n))
    glob = {format_labels(a) for a in iter_valid(cp)}
    for a in iter_locally_valid(cp):
        s = format_labels(a)
        assert (pile_order(m, n, s) is not None) == (s in glob), s


def test_pile_model_crease_order_matches_library():
    cp = stamp_grid(StampGrid(3, 3))
    assert len(stamp_folds(3, 3)) == len(cp.creases)


@pytest.mark.parametrize("text", PINWHEELS)
def test_3x3_pinwheel_is_locally_valid_but_unfoldable(text):
    cp = stamp_grid(StampGrid(3, 3))
    lab = parse_labels(text, 12)
    assert local_filter(cp, lab)
    assert not global_is_valid(cp, lab)
    assert pile_order(3, 3, text) is None


def test_3x3_pinwheel_cycle_by_hand():
    """The pinwheel's crease relations alone force a cyclic stacking.

    Stamps are numbered ``i * 3 + j`` (column i, row j); the center is 4.
    Walking the ring of outer stamps, every crease between neighbours puts
    the earlier stamp above the later one, so the ring closes into a cycle
    6 > 3 > 0 > 1 > 2 > 5 > 8 > 7 > 6.
    """
    text = PINWHEELS[0]
    up = lambda s: (s // 3 + s % 3) % 2 == 0  # noqa: E731
    above = set()
    for (a, b, _), lab in zip(stamp_folds(3, 3), text):
        u, d = (a, b) if up(a) else (b, a)
        above.add((u, d) if lab == "M" else (d, u))
    center = [lab for (a, b, _), lab in zip(stamp_folds(3, 3), text) if 4 in (a, b)]
    assert set(center) == {"M"}
    ring = [6, 3, 0, 1, 2, 5, 8, 7]
    assert all((ring[k], ring[(k + 1) % 8]) in above for k in range(8))
    assert pile_order(3, 3, text) is None


def test_3x3_rejections_are_exactly_the_pinwheels():
    cp = stamp_grid(StampGrid(3, 3))
    glob = {format_labels(a) for a in iter_valid(cp)}
    local = {format_labels(a) for a in iter_locally_valid(cp)}
    assert len(local) == 256
    assert local - glob == set(PINWHEELS)
