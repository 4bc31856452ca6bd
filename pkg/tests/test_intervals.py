"""FracSet algebra: exact interval sets with open/closed endpoints."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from reflectpath.intervals import FracSet, Interval

F = Fraction


def iv(lo, hi, lc=True, hc=True):
    return FracSet.interval(F(lo), F(hi), lc, hc)


spans = st.tuples(
    st.fractions(min_value=0, max_value=1, max_denominator=16),
    st.fractions(min_value=0, max_value=1, max_denominator=16),
    st.booleans(), st.booleans(),
)


@st.composite
def fracsets(draw):
    out = FracSet.empty()
    for lo, hi, lc, hc in draw(st.lists(spans, max_size=4)):
        if lo > hi:
            lo, hi = hi, lo
        if lo == hi and not (lc and hc):
            continue
        out = out.union(FracSet.interval(lo, hi, lc, hc))
    return out


def test_union_merges_touching_closed():
    assert iv(0, 1).union(iv(1, 2)) == iv(0, 2)


def test_open_endpoints_do_not_merge():
    s = iv(0, 1, True, False).union(iv(1, 2, False, True))
    assert len(s.intervals()) == 2
    assert not s.contains(F(1))


def test_subtract_point_splits():
    s = iv(0, 2).subtract(FracSet.point(F(1)))
    parts = s.intervals()
    assert len(parts) == 2
    assert not s.contains(F(1))
    assert s.contains(F(1, 2)) and s.contains(F(3, 2))


def test_point_set():
    p = FracSet.point(F(1, 3))
    assert p.contains(F(1, 3))
    assert p.measure() == 0
    assert p.intervals()[0].degenerate


def test_measure():
    s = iv(0, F(1, 2)).union(iv(F(3, 4), 1))
    assert s.measure() == F(3, 4)


def test_bounds():
    assert iv(F(1, 8), F(7, 8)).bounds() == (F(1, 8), F(7, 8))
    assert FracSet.empty().bounds() is None


def test_interval_pick_inside():
    i = Interval(F(0), F(1), False, False)
    assert F(0) < i.pick() < F(1)


@given(fracsets(), fracsets())
@settings(max_examples=200)
def test_union_commutes(a, b):
    assert a.union(b) == b.union(a)


@given(fracsets(), fracsets())
@settings(max_examples=200)
def test_intersect_commutes(a, b):
    assert a.intersect(b) == b.intersect(a)


@given(fracsets(), fracsets(), fracsets())
@settings(max_examples=100)
def test_union_associates(a, b, c):
    assert a.union(b).union(c) == a.union(b.union(c))


@given(fracsets(), fracsets())
@settings(max_examples=200)
def test_subtract_disjoint_from_rest(a, b):
    d = a.subtract(b)
    assert d.intersect(b).is_empty()
    assert d.union(a.intersect(b)) == a


@given(fracsets(), fracsets(), st.fractions(min_value=0, max_value=1, max_denominator=128))
@settings(max_examples=300)
def test_membership_consistency(a, b, x):
    assert a.union(b).contains(x) == (a.contains(x) or b.contains(x))
    assert a.intersect(b).contains(x) == (a.contains(x) and b.contains(x))
    assert a.subtract(b).contains(x) == (a.contains(x) and not b.contains(x))


@given(fracsets())
@settings(max_examples=200)
def test_normal_form_is_canonical(a):
    rebuilt = FracSet.empty()
    for i in a.intervals():
        rebuilt = rebuilt.union(FracSet.from_intervals([i]))
    assert rebuilt == a
