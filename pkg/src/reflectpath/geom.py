"""Exact planar primitives: rational points, orientation, segment intersection.

Points are stored as canonical homogeneous integer triples (X, Y, W), W > 0,
so predicates run on integers only.  Scalars exposed to callers are
fractions.Fraction values (exact, canonical).
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from math import gcd

from .kernel import cmp_q, orient


class GeomError(Exception):
    pass


class Orientation(IntEnum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def _to_fraction(value) -> Fraction:
    """Accept int, Fraction, or a string like '3/4' or '0.25'."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        raise GeomError(f"refusing inexact float coordinate {value!r}; pass str or Fraction")
    raise GeomError(f"unsupported coordinate type {type(value).__name__}")


class Point:
    """Exact point with canonical homogeneous integer coordinates."""

    __slots__ = ("X", "Y", "W")

    def __init__(self, X: int, Y: int, W: int):
        if W == 0:
            raise GeomError("point at infinity")
        if W < 0:
            X, Y, W = -X, -Y, -W
        g = gcd(gcd(abs(X), abs(Y)), W)
        if g > 1:
            X //= g
            Y //= g
            W //= g
        self.X = X
        self.Y = Y
        self.W = W

    @staticmethod
    def from_xy(x, y) -> "Point":
        fx = _to_fraction(x)
        fy = _to_fraction(y)
        w = fx.denominator * fy.denominator // gcd(fx.denominator, fy.denominator)
        return Point(fx.numerator * (w // fx.denominator), fy.numerator * (w // fy.denominator), w)

    @property
    def x(self) -> Fraction:
        return Fraction(self.X, self.W)

    @property
    def y(self) -> Fraction:
        return Fraction(self.Y, self.W)

    def key(self) -> tuple[int, int, int]:
        return (self.X, self.Y, self.W)

    def __eq__(self, other):
        return isinstance(other, Point) and self.X == other.X and self.Y == other.Y and self.W == other.W

    def __hash__(self):
        return hash((self.X, self.Y, self.W))

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


def orient_sign(a: Point, b: Point, c: Point) -> int:
    """Raw sign of (b - a) x (c - a); the hot predicate."""
    return orient(a.X, a.Y, a.W, b.X, b.Y, b.W, c.X, c.Y, c.W)


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    return Orientation(orient_sign(a, b, c))


def cmp_x(p: Point, q: Point) -> int:
    return cmp_q(p.X, p.W, q.X, q.W)


def cmp_y(p: Point, q: Point) -> int:
    return cmp_q(p.Y, p.W, q.Y, q.W)


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """True when p lies on the closed segment ab."""
    if orient_sign(a, b, p) != 0:
        return False
    return _collinear_between(p, a, b)


def _collinear_between(p: Point, a: Point, b: Point) -> bool:
    """Box test for a point known to be collinear with ab (closed)."""
    cx = cmp_x(a, b)
    if cx != 0:
        lo, hi = (a, b) if cx < 0 else (b, a)
        return cmp_x(lo, p) <= 0 and cmp_x(p, hi) <= 0
    cy = cmp_y(a, b)
    if cy == 0:
        return p == a
    lo, hi = (a, b) if cy < 0 else (b, a)
    return cmp_y(lo, p) <= 0 and cmp_y(p, hi) <= 0


def strictly_inside_segment(p: Point, a: Point, b: Point) -> bool:
    return on_segment(p, a, b) and p != a and p != b


class Line:
    """Homogeneous line A*x + B*y + C = 0 with integer coefficients."""

    __slots__ = ("A", "B", "C")

    def __init__(self, A: int, B: int, C: int):
        if A == 0 and B == 0:
            raise GeomError("degenerate line")
        g = gcd(gcd(abs(A), abs(B)), abs(C))
        if g > 1:
            A //= g
            B //= g
            C //= g
        self.A = A
        self.B = B
        self.C = C

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        if p == q:
            raise GeomError("line through coincident points")
        return Line(
            p.Y * q.W - q.Y * p.W,
            q.X * p.W - p.X * q.W,
            p.X * q.Y - q.X * p.Y,
        )

    def side(self, p: Point) -> int:
        v = self.A * p.X + self.B * p.Y + self.C * p.W
        return 1 if v > 0 else (-1 if v < 0 else 0)

    def intersect(self, other: "Line") -> Point | None:
        w = self.A * other.B - other.A * self.B
        if w == 0:
            return None
        return Point(
            self.B * other.C - other.B * self.C,
            other.A * self.C - self.A * other.C,
            w,
        )


def line_intersection(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """Intersection of lines ab and cd, or None when parallel."""
    return Line.through(a, b).intersect(Line.through(c, d))


def point_between(a: Point, b: Point, t: Fraction) -> Point:
    """a + t * (b - a), exact."""
    return Point.from_xy(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def midpoint(a: Point, b: Point) -> Point:
    return Point(a.X * b.W + b.X * a.W, a.Y * b.W + b.Y * a.W, 2 * a.W * b.W)


def param_on_segment(p: Point, a: Point, b: Point) -> Fraction:
    """Parameter t with p = a + t*(b - a); caller guarantees collinearity."""
    dx = b.x - a.x
    if dx != 0:
        return (p.x - a.x) / dx
    dy = b.y - a.y
    if dy == 0:
        raise GeomError("degenerate segment")
    return (p.y - a.y) / dy


class SegmentIntersection:
    """Classification of how two closed segments meet."""

    __slots__ = ("kind", "point", "overlap")

    def __init__(self, kind: str, point: Point | None = None, overlap: tuple[Point, Point] | None = None):
        self.kind = kind  # none | proper | touch | overlap
        self.point = point
        self.overlap = overlap

    def __repr__(self):
        if self.kind == "overlap":
            return f"SegmentIntersection(overlap, {self.overlap})"
        if self.kind == "none":
            return "SegmentIntersection(none)"
        return f"SegmentIntersection({self.kind}, {self.point})"


def segment_intersection(a: Point, b: Point, c: Point, d: Point) -> SegmentIntersection:
    """Classify the intersection of closed segments ab and cd."""
    o1 = orient_sign(a, b, c)
    o2 = orient_sign(a, b, d)
    o3 = orient_sign(c, d, a)
    o4 = orient_sign(c, d, b)

    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        return _collinear_intersection(a, b, c, d)

    if ((o1 > 0) != (o2 > 0)) and ((o3 > 0) != (o4 > 0)) and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        p = line_intersection(a, b, c, d)
        assert p is not None
        return SegmentIntersection("proper", point=p)

    # Endpoint touches: one of the orientations vanishes and the collinear
    # endpoint falls inside the other segment's box.
    if o1 == 0 and _collinear_between(c, a, b):
        return SegmentIntersection("touch", point=c)
    if o2 == 0 and _collinear_between(d, a, b):
        return SegmentIntersection("touch", point=d)
    if o3 == 0 and _collinear_between(a, c, d):
        return SegmentIntersection("touch", point=a)
    if o4 == 0 and _collinear_between(b, c, d):
        return SegmentIntersection("touch", point=b)
    return SegmentIntersection("none")


def _collinear_intersection(a: Point, b: Point, c: Point, d: Point) -> SegmentIntersection:
    pts = []
    for p in (c, d):
        if _collinear_between(p, a, b):
            pts.append(p)
    for p in (a, b):
        if _collinear_between(p, c, d) and p not in pts:
            pts.append(p)
    if not pts:
        return SegmentIntersection("none")
    uniq: list[Point] = []
    for p in pts:
        if p not in uniq:
            uniq.append(p)
    if len(uniq) == 1:
        return SegmentIntersection("touch", point=uniq[0])
    lo = hi = uniq[0]
    for p in uniq[1:]:
        if cmp_x(p, lo) < 0 or (cmp_x(p, lo) == 0 and cmp_y(p, lo) < 0):
            lo = p
        if cmp_x(p, hi) > 0 or (cmp_x(p, hi) == 0 and cmp_y(p, hi) > 0):
            hi = p
    if lo == hi:
        return SegmentIntersection("touch", point=lo)
    return SegmentIntersection("overlap", overlap=(lo, hi))
