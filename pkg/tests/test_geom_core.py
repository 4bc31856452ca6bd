"""Exact predicate layer: orientation, intersections, params, both kernels."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflectpath.geom import (Orientation, Point, on_segment, orient_sign,
                              param_on_segment, point_between,
                              segment_intersection)

P = lambda x, y: Point.from_xy(Fraction(x), Fraction(y))

rationals = st.fractions(min_value=-50, max_value=50,
                         max_denominator=64)
points = st.builds(lambda x, y: Point.from_xy(x, y), rationals, rationals)


def test_orientation_signs():
    assert orient_sign(P(0, 0), P(1, 0), P(0, 1)) == 1
    assert orient_sign(P(0, 0), P(1, 0), P(0, -1)) == -1
    assert orient_sign(P(0, 0), P(1, 0), P(2, 0)) == 0
    assert Orientation(1) is Orientation.LEFT


@given(points, points, points)
@settings(max_examples=200)
def test_orientation_antisymmetry(a, b, c):
    assert orient_sign(a, b, c) == -orient_sign(b, a, c)
    assert orient_sign(a, b, c) == orient_sign(b, c, a)


def test_point_between_endpoints():
    a, b = P(1, 2), P(5, 10)
    assert point_between(a, b, Fraction(0)) == a
    assert point_between(a, b, Fraction(1)) == b
    mid = point_between(a, b, Fraction(1, 2))
    assert (mid.x, mid.y) == (Fraction(3), Fraction(6))


@given(points, points, st.fractions(min_value=0, max_value=1, max_denominator=32))
@settings(max_examples=200)
def test_param_roundtrip(a, b, t):
    if a == b:
        return
    p = point_between(a, b, t)
    assert param_on_segment(p, a, b) == t
    assert on_segment(p, a, b)


def test_segment_intersection_kinds():
    # proper crossing
    r = segment_intersection(P(0, 0), P(2, 2), P(0, 2), P(2, 0))
    assert r.kind == "proper" and r.point == P(1, 1)
    # shared endpoint is a touch, not a proper crossing
    r = segment_intersection(P(0, 0), P(1, 1), P(1, 1), P(2, 0))
    assert r.kind == "touch" and r.point == P(1, 1)
    # endpoint landing mid-segment
    r = segment_intersection(P(0, 0), P(2, 0), P(1, 0), P(1, 5))
    assert r.kind == "touch" and r.point == P(1, 0)
    # disjoint
    assert segment_intersection(P(0, 0), P(1, 0), P(0, 1), P(1, 1)).kind == "none"
    # collinear overlap
    r = segment_intersection(P(0, 0), P(4, 0), P(2, 0), P(6, 0))
    assert r.kind == "overlap"
    assert set(r.overlap) == {P(2, 0), P(4, 0)}


@given(points, points, points, points)
@settings(max_examples=200)
def test_segment_intersection_symmetry(a, b, c, d):
    r1 = segment_intersection(a, b, c, d)
    r2 = segment_intersection(c, d, a, b)
    assert r1.kind == r2.kind


def _homog(fx: Fraction, fy: Fraction) -> tuple[int, int, int]:
    """(X, Y, W) integer triple with x = X/W, y = Y/W, W > 0."""
    w = fx.denominator * fy.denominator
    return int(fx * w), int(fy * w), w


def test_kernel_parity():
    """Compiled and pure predicates must agree bit-for-bit."""
    from reflectpath import _kernel_py
    try:
        from reflectpath import _kernel_c
    except ImportError:
        pytest.skip("compiled kernel not built")
    cases = [
        ((0, 0), (1, 0), (0, 1)),
        ((0, 0), (1, 0), (2, 0)),
        ((Fraction(1, 3), 0), (1, Fraction(2, 7)), (Fraction(-5, 11), 4)),
        ((10**40, 1), (-(10**40), 1), (0, 1)),       # big-int fallback path
        ((Fraction(1, 10**30), 0), (0, 0), (1, 1)),
    ]
    for a, b, c in cases:
        ta = _homog(Fraction(a[0]), Fraction(a[1]))
        tb = _homog(Fraction(b[0]), Fraction(b[1]))
        tc = _homog(Fraction(c[0]), Fraction(c[1]))
        assert _kernel_c.orient(*ta, *tb, *tc) == _kernel_py.orient(*ta, *tb, *tc)
    assert _kernel_c.cmp_q(1, 3, 2, 6) == _kernel_py.cmp_q(1, 3, 2, 6) == 0
    assert _kernel_c.cmp_q(10**50, 7, 1, 1) == _kernel_py.cmp_q(10**50, 7, 1, 1) == 1


@given(rationals, rationals, rationals, rationals, rationals, rationals)
@settings(max_examples=300)
def test_kernel_parity_random(ax, ay, bx, by, cx, cy):
    from reflectpath import _kernel_py
    try:
        from reflectpath import _kernel_c
    except ImportError:
        pytest.skip("compiled kernel not built")
    ta, tb, tc = _homog(ax, ay), _homog(bx, by), _homog(cx, cy)
    assert _kernel_c.orient(*ta, *tb, *tc) == _kernel_py.orient(*ta, *tb, *tc)
    assert (_kernel_c.cmp_q(ta[0], ta[2], tb[0], tb[2])
            == _kernel_py.cmp_q(ta[0], ta[2], tb[0], tb[2]))
