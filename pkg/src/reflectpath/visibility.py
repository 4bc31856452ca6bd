"""Exact visibility interval computations on segments.

All sets are parameter sets (Fraction params in [0, 1]) on a host segment,
computed by cutting the segment at candidate critical points and deciding
each atomic piece by one midpoint test.  Visibility is closed: a sightline
may graze vertices and run along the boundary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable

from .geom import Line, Point, line_intersection, on_segment, orient_sign, param_on_segment, point_between
from .intervals import FracSet, Interval
from .polygon import Polygon


def refine_params(window: FracSet, cuts: Iterable[Fraction],
                  predicate: Callable[[Fraction], bool]) -> FracSet:
    """Subset of ``window`` where ``predicate`` holds, given that it can only
    change truth value at ``cuts`` (or at window interval endpoints).

    Interiors are decided by midpoint tests, endpoints individually.
    """
    out = FracSet.empty()
    cut_list = sorted(set(cuts))
    for iv in window.intervals():
        if iv.degenerate:
            if predicate(iv.lo):
                out = out.union(FracSet.point(iv.lo))
            continue
        inner = [c for c in cut_list if iv.lo < c < iv.hi]
        stops = [iv.lo] + inner + [iv.hi]
        passed = []
        for i in range(len(stops) - 1):
            lo, hi = stops[i], stops[i + 1]
            if not predicate((lo + hi) / 2):
                passed.append(False)
                continue
            passed.append(True)
            lo_closed = (iv.lo_closed if lo == iv.lo else True) and predicate(lo)
            hi_closed = (iv.hi_closed if hi == iv.hi else True) and predicate(hi)
            out = out.union(FracSet.interval(lo, hi, lo_closed, hi_closed))
        # A stop can satisfy the predicate in isolation (grazing contact)
        # even when both neighbouring pieces fail; keep such points.
        for i, v in enumerate(stops):
            left_ok = passed[i - 1] if i > 0 else None
            right_ok = passed[i] if i < len(passed) else None
            if left_ok or right_ok:
                continue
            if v == iv.lo and not iv.lo_closed:
                continue
            if v == iv.hi and not iv.hi_closed:
                continue
            if predicate(v):
                out = out.union(FracSet.point(v))
    return out


def segment_line_cut(a: Point, b: Point, p: Point, q: Point) -> Fraction | None:
    """Param in [0, 1] where segment a-b meets line p-q, None if off or parallel."""
    if p == q:
        return None
    sa = orient_sign(p, q, a)
    sb = orient_sign(p, q, b)
    if sa == 0 and sb == 0:
        return None  # collinear: no single cut point
    if sa == 0:
        return Fraction(0)
    if sb == 0:
        return Fraction(1)
    if (sa > 0) == (sb > 0):
        return None
    pt = line_intersection(a, b, p, q)
    if pt is None:
        return None
    return param_on_segment(pt, a, b)


def collinear_boundary_cuts(P: Polygon, a: Point, b: Point) -> list[Fraction]:
    """Cut params where the supporting line of a-b meets polygon edges.

    Needed only when a sightline endpoint lies on that line: along a fixed
    line, containment flips exactly at boundary contacts.
    """
    cuts: list[Fraction] = []
    for i in range(P.n):
        ea, eb = P.edge(i)
        for pt in (ea, eb):
            if orient_sign(a, b, pt) == 0:
                cuts.append(param_on_segment(pt, a, b))
        c = segment_line_cut(ea, eb, a, b)
        if c is not None:
            pt = point_between(ea, eb, c)
            if orient_sign(a, b, pt) == 0:
                cuts.append(param_on_segment(pt, a, b))
    return [c for c in cuts if 0 < c < 1]


def visible_params(P: Polygon, y: Point, a: Point, b: Point,
                   window: FracSet | None = None) -> FracSet:
    """Params u on segment a-b with a+u(b-a) visible from y inside P."""
    if window is None:
        window = FracSet.interval(Fraction(0), Fraction(1), True, True)
    if window.is_empty():
        return window
    cuts: list[Fraction] = []
    for v in P.vertices:
        if v == y:
            continue
        c = segment_line_cut(a, b, y, v)
        if c is not None:
            cuts.append(c)
    if orient_sign(a, b, y) == 0:
        cuts.extend(collinear_boundary_cuts(P, a, b))

    def pred(u: Fraction) -> bool:
        return P.segment_inside(y, point_between(a, b, u))

    return refine_params(window, cuts, pred)


def weakly_visible(P: Polygon, y: Point, a: Point, b: Point) -> bool:
    """True if y sees at least one point of segment a-b."""
    return not visible_params(P, y, a, b).is_empty()


def pairwise_cut_params(a: Point, b: Point, anchors: list[Point]) -> list[Fraction]:
    """Params on a-b cut by lines through each pair of distinct anchors.

    Anchors lying on the segment itself contribute their own params, which
    covers events whose critical line degenerates onto the host line.
    """
    cuts: list[Fraction] = []
    m = len(anchors)
    for i in range(m):
        if on_segment(anchors[i], a, b):
            c = param_on_segment(anchors[i], a, b)
            if 0 < c < 1:
                cuts.append(c)
        for j in range(i + 1, m):
            c = segment_line_cut(a, b, anchors[i], anchors[j])
            if c is not None and 0 < c < 1:
                cuts.append(c)
    return cuts


def window_sample_points(a: Point, b: Point, window: FracSet,
                         per_interval: int = 2) -> list[Point]:
    """Deterministic sample points inside a param window on segment a-b.

    Midpoints first (never degenerate), then closed endpoints.  Used as a
    fast existence pre-check before a full refinement.
    """
    pts: list[Point] = []
    tail: list[Point] = []
    for iv in window.intervals():
        pts.append(point_between(a, b, (iv.lo + iv.hi) / 2))
        if per_interval > 1:
            if iv.lo_closed:
                tail.append(point_between(a, b, iv.lo))
            if iv.hi_closed and not iv.degenerate:
                tail.append(point_between(a, b, iv.hi))
    return pts + tail


def weak_visible_params(P: Polygon, src_a: Point, src_b: Point,
                        src_window: FracSet, dst_a: Point, dst_b: Point,
                        dst_window: FracSet | None = None) -> FracSet:
    """Params u on dst such that the point at u sees some src-window point.

    Transitions of weak visibility happen only on lines through two polygon
    vertices or through a vertex and a source-interval endpoint, so those
    lines (plus collinear boundary contacts of the destination's host line)
    are a sufficient cut set; each atomic piece is decided at its midpoint.
    """
    if dst_window is None:
        dst_window = FracSet.interval(Fraction(0), Fraction(1), True, True)
    if dst_window.is_empty() or src_window.is_empty():
        return FracSet.empty()

    anchors = list(P.vertices)
    for iv in src_window.intervals():
        anchors.append(point_between(src_a, src_b, iv.lo))
        if not iv.degenerate:
            anchors.append(point_between(src_a, src_b, iv.hi))
    cuts = pairwise_cut_params(dst_a, dst_b, anchors)
    cuts.extend(collinear_boundary_cuts(P, dst_a, dst_b))

    probes = window_sample_points(src_a, src_b, src_window)

    def pred(u: Fraction) -> bool:
        m = point_between(dst_a, dst_b, u)
        for q in probes:
            if P.segment_inside(m, q):
                return True
        return not visible_params(P, m, src_a, src_b, src_window).is_empty()

    return refine_params(dst_window, cuts, pred)
