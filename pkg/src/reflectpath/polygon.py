"""Simple polygon model: validation, containment, boundary coordinates, chains.

The boundary is parameterized cyclically by u = edge_index + t with t in
[0, 1) along each edge, so boundary points order naturally and chains are
position ranges in traversal direction (counterclockwise or clockwise).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, InternalInconsistency, MixedChainError
from .geom import (
    Point,
    cmp_x,
    cmp_y,
    on_segment,
    orient_sign,
    param_on_segment,
    point_between,
    segment_intersection,
)
from .intervals import FracSet, Interval

INSIDE = "inside"
BOUNDARY = "boundary"
OUTSIDE = "outside"


class ValidationReport:
    __slots__ = ("ok", "issues")

    def __init__(self, ok: bool, issues: list[str]):
        self.ok = ok
        self.issues = issues

    def __repr__(self):
        return f"ValidationReport(ok={self.ok}, issues={self.issues})"


class BoundaryPoint:
    """A point on the boundary addressed as (edge index, parameter t in [0,1))."""

    __slots__ = ("edge", "t", "point")

    def __init__(self, edge: int, t: Fraction, point: Point):
        self.edge = edge
        self.t = t
        self.point = point

    @property
    def u(self) -> Fraction:
        return self.edge + self.t

    def at_vertex(self) -> bool:
        return self.t == 0

    def __eq__(self, other):
        return isinstance(other, BoundaryPoint) and self.edge == other.edge and self.t == other.t

    def __hash__(self):
        return hash((self.edge, self.t))

    def __repr__(self):
        return f"BoundaryPoint(edge={self.edge}, t={self.t}, {self.point!r})"


class Polygon:
    def __init__(self, vertices):
        pts = []
        for v in vertices:
            pts.append(v if isinstance(v, Point) else Point.from_xy(*v))
        if len(pts) < 3:
            raise InputError("polygon needs at least 3 vertices")
        self.vertices: tuple[Point, ...] = tuple(pts)
        self.n = len(pts)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % self.n]

    def edge(self, i: int) -> tuple[Point, Point]:
        i %= self.n
        return self.vertices[i], self.vertices[(i + 1) % self.n]

    def edges(self):
        for i in range(self.n):
            yield i, self.vertices[i], self.vertices[(i + 1) % self.n]

    def signed_area2(self) -> Fraction:
        total = Fraction(0)
        for i in range(self.n):
            a = self.vertices[i]
            b = self.vertices[(i + 1) % self.n]
            total += (a.x * b.y) - (b.x * a.y)
        return total

    def is_ccw(self) -> bool:
        return self.signed_area2() > 0

    def reflex_vertex_indices(self) -> list[int]:
        """Indices with interior angle > pi (assumes CCW orientation)."""
        out = []
        for i in range(self.n):
            a = self.vertices[(i - 1) % self.n]
            b = self.vertices[i]
            c = self.vertices[(i + 1) % self.n]
            if orient_sign(a, b, c) < 0:
                out.append(i)
        return out

    def validate(self) -> ValidationReport:
        issues: list[str] = []
        seen = set()
        for v in self.vertices:
            if v.key() in seen:
                issues.append(f"repeated vertex {v!r}")
            seen.add(v.key())
        if self.signed_area2() <= 0:
            issues.append("orientation is clockwise or degenerate; expected counterclockwise")
        for i in range(self.n):
            a, b = self.edge(i)
            if a == b:
                issues.append(f"zero-length edge {i}")
        for i in range(self.n):
            a, b = self.edge(i)
            for j in range(i + 1, self.n):
                c, d = self.edge(j)
                adjacent = (j == i + 1) or (i == 0 and j == self.n - 1)
                si = segment_intersection(a, b, c, d)
                if adjacent:
                    shared = b if j == i + 1 else a
                    if si.kind == "overlap":
                        issues.append(f"edges {i} and {j} overlap")
                    elif si.kind == "proper":
                        issues.append(f"edges {i} and {j} cross")
                    elif si.kind == "touch" and si.point != shared:
                        issues.append(f"edges {i} and {j} touch away from their shared vertex")
                else:
                    if si.kind != "none":
                        issues.append(f"edges {i} and {j} intersect ({si.kind})")
        return ValidationReport(not issues, issues)

    # -- containment ------------------------------------------------------

    def contains(self, p: Point) -> str:
        crossings = 0
        for i in range(self.n):
            a, b = self.edge(i)
            if on_segment(p, a, b):
                return BOUNDARY
            ya = cmp_y(a, p)
            yb = cmp_y(b, p)
            if (ya <= 0) != (yb <= 0):
                low, high = (a, b) if ya < yb else (b, a)
                if orient_sign(low, high, p) > 0:
                    crossings ^= 1
        return INSIDE if crossings else OUTSIDE

    def segment_inside(self, p: Point, q: Point) -> bool:
        """True when the closed segment pq stays inside the closed polygon."""
        if p == q:
            return self.contains(p) != OUTSIDE
        events: set[Fraction] = {Fraction(0), Fraction(1)}
        for i in range(self.n):
            a, b = self.edge(i)
            o1 = orient_sign(p, q, a)
            o2 = orient_sign(p, q, b)
            if o1 == 0 and o2 == 0:
                ta = _seg_param(p, q, a)
                tb = _seg_param(p, q, b)
                lo, hi = (ta, tb) if ta <= tb else (tb, ta)
                lo = max(lo, Fraction(0))
                hi = min(hi, Fraction(1))
                if lo <= hi:
                    events.add(lo)
                    events.add(hi)
                continue
            o3 = orient_sign(a, b, p)
            o4 = orient_sign(a, b, q)
            if o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
                if (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0):
                    return False
                continue
            if o1 == 0 and _within01(t := _seg_param(p, q, a)) and _between_box(a, p, q):
                events.add(t)
            if o2 == 0 and _within01(t := _seg_param(p, q, b)) and _between_box(b, p, q):
                events.add(t)
            # p or q exactly on the edge line contributes t=0 / t=1, already present
        ordered = sorted(events)
        for t1, t2 in zip(ordered, ordered[1:]):
            mid = point_between(p, q, (t1 + t2) / 2)
            if self.contains(mid) == OUTSIDE:
                return False
        if len(ordered) == 1:
            return self.contains(p) != OUTSIDE
        return True

    # -- boundary coordinates ---------------------------------------------

    def boundary_point(self, edge: int, t) -> BoundaryPoint:
        t = Fraction(t)
        if t < 0 or t > 1:
            raise InputError(f"edge parameter {t} outside [0, 1]")
        edge %= self.n
        if t == 1:
            edge = (edge + 1) % self.n
            t = Fraction(0)
        a, b = self.edge(edge)
        return BoundaryPoint(edge, t, point_between(a, b, t) if t != 0 else a)

    def boundary_point_at_u(self, u: Fraction) -> BoundaryPoint:
        u = Fraction(u) % self.n
        edge = int(u)
        return self.boundary_point(edge, u - edge)

    def locate_on_boundary(self, p: Point) -> BoundaryPoint | None:
        for i in range(self.n):
            a, b = self.edge(i)
            if on_segment(p, a, b):
                if p == b:
                    return self.boundary_point((i + 1) % self.n, Fraction(0))
                t = Fraction(0) if p == a else param_on_segment(p, a, b)
                return BoundaryPoint(i, t, p)
        return None

    def vertex_boundary_point(self, i: int) -> BoundaryPoint:
        return BoundaryPoint(i % self.n, Fraction(0), self.vertex(i))

    # -- ray shooting -------------------------------------------------------

    def ray_first_boundary_hit(self, origin: Point, through: Point, t_min=Fraction(0)) -> BoundaryPoint | None:
        """First boundary contact of the ray origin->through at parameter > t_min.

        The parameter scales so that `through` sits at t = 1.
        """
        if origin == through:
            raise InputError("ray needs two distinct points")
        t_min = Fraction(t_min)
        best: tuple[Fraction, BoundaryPoint] | None = None
        for i in range(self.n):
            a, b = self.edge(i)
            o1 = orient_sign(origin, through, a)
            o2 = orient_sign(origin, through, b)
            if o1 == 0 and o2 == 0:
                for cand in (a, b):
                    t = _seg_param(origin, through, cand)
                    if t > t_min and (best is None or t < best[0]):
                        best = (t, self.locate_on_boundary(cand))
                continue
            if o1 == 0 or o2 == 0:
                cand = a if o1 == 0 else b
                t = _seg_param(origin, through, cand)
                if t > t_min and (best is None or t < best[0]):
                    best = (t, self.locate_on_boundary(cand))
                continue
            if (o1 > 0) == (o2 > 0):
                continue
            hit = _line_cross_point(origin, through, a, b)
            t = _seg_param(origin, through, hit)
            if t > t_min and (best is None or t < best[0]):
                bp = self.boundary_point(i, param_on_segment(hit, a, b))
                best = (t, bp)
        return best[1] if best else None


def _within01(t: Fraction) -> bool:
    return 0 <= t <= 1


def _between_box(p: Point, a: Point, b: Point) -> bool:
    cx = cmp_x(a, b)
    if cx != 0:
        lo, hi = (a, b) if cx < 0 else (b, a)
        return cmp_x(lo, p) <= 0 and cmp_x(p, hi) <= 0
    lo, hi = (a, b) if cmp_y(a, b) < 0 else (b, a)
    return cmp_y(lo, p) <= 0 and cmp_y(p, hi) <= 0


def _seg_param(p: Point, q: Point, r: Point) -> Fraction:
    """Parameter of r along line pq (r assumed on the line)."""
    dx = q.x - p.x
    if dx != 0:
        return (r.x - p.x) / dx
    dy = q.y - p.y
    if dy == 0:
        raise InternalInconsistency("parameter on degenerate segment")
    return (r.y - p.y) / dy


def _line_cross_point(p: Point, q: Point, a: Point, b: Point) -> Point:
    from .geom import line_intersection

    pt = line_intersection(p, q, a, b)
    if pt is None:
        raise InternalInconsistency("expected crossing lines")
    return pt


class BoundaryChain:
    """A directed boundary arc from `start` to `end` (ccw=False means clockwise).

    Positions measure progress from the start anchor in edge-parameter units,
    so they order points along the chain but are not Euclidean lengths.
    """

    def __init__(self, polygon: Polygon, start: BoundaryPoint, end: BoundaryPoint, ccw: bool,
                 name: str = "", full_loop: bool = False):
        self.polygon = polygon
        self.start = start
        self.end = end
        self.ccw = ccw
        self.name = name or ("ccw" if ccw else "cw")
        if full_loop:
            if start != end:
                raise InternalInconsistency("full loop requires identical anchors")
            self.length = Fraction(polygon.n)
        else:
            self.length = self._pos_of_u(end.u)
            if self.length == 0 and start != end:
                raise InternalInconsistency("zero-length chain with distinct anchors")

    def _pos_of_u(self, u: Fraction) -> Fraction:
        n = self.polygon.n
        if self.ccw:
            return (u - self.start.u) % n
        return (self.start.u - u) % n

    def position(self, bp: BoundaryPoint) -> Fraction:
        return self._pos_of_u(bp.u)

    def contains_position(self, pos: Fraction) -> bool:
        return 0 <= pos <= self.length

    def point_at(self, pos: Fraction) -> BoundaryPoint:
        if pos < 0 or pos > self.length:
            raise MixedChainError(f"position {pos} outside chain of length {self.length}")
        n = self.polygon.n
        u = (self.start.u + pos) % n if self.ccw else (self.start.u - pos) % n
        return self.polygon.boundary_point_at_u(u)

    def edge_runs(self, lo: Fraction, hi: Fraction) -> list[tuple[int, Fraction, Fraction]]:
        """Decompose chain positions [lo, hi] into per-edge t ranges.

        Returns (edge, t_lo, t_hi) triples with t_lo < t_hi in edge direction.
        """
        if lo > hi:
            raise MixedChainError("inverted position range")
        lo = max(lo, Fraction(0))
        hi = min(hi, self.length)
        if lo >= hi:
            return []
        runs = []
        pos = lo
        n = self.polygon.n
        while pos < hi:
            if self.ccw:
                u = (self.start.u + pos) % n
                edge = int(u)
                t0 = u - edge
                room = 1 - t0
                step = min(room, hi - pos)
                runs.append((edge, t0, t0 + step))
            else:
                u = (self.start.u - pos) % n
                edge = int(u)
                t1 = u - edge
                if t1 == 0:
                    edge = (edge - 1) % n
                    t1 = Fraction(1)
                room = t1
                step = min(room, hi - pos)
                runs.append((edge, t1 - step, t1))
            pos += step
        return runs

    def position_of_edge_t(self, edge: int, t: Fraction) -> Fraction:
        return self._pos_of_u(Fraction(edge) + t)

    def vertices_strictly_inside(self) -> list[int]:
        """Polygon vertex indices in the open chain (excluding anchors)."""
        out = []
        for i in range(self.polygon.n):
            pos = self._pos_of_u(Fraction(i))
            if 0 < pos < self.length:
                out.append(i)
        vkey = (lambda i: self._pos_of_u(Fraction(i)))
        out.sort(key=vkey)
        return out


def chain_interval_set(chain: BoundaryChain, lo: Fraction, hi: Fraction,
                       lo_closed: bool = True, hi_closed: bool = True) -> dict[int, FracSet]:
    """Per-edge FracSets (in edge-local t) covering chain positions [lo, hi]."""
    runs = chain.edge_runs(lo, hi)
    out: dict[int, FracSet] = {}
    for edge, t0, t1 in runs:
        piece = FracSet.interval(t0, t1, True, True)
        out[edge] = out.get(edge, FracSet.empty()).union(piece)
    # apply endpoint openness exactly at the extreme positions
    if not lo_closed:
        bp = chain.point_at(lo)
        out = _drop_point(out, bp)
    if not hi_closed:
        bp = chain.point_at(hi)
        out = _drop_point(out, bp)
    return out


def _drop_point(sets: dict[int, FracSet], bp: BoundaryPoint) -> dict[int, FracSet]:
    out = dict(sets)
    if bp.edge in out:
        out[bp.edge] = out[bp.edge].subtract(FracSet.point(bp.t))
    prev = bp.edge - 1
    if bp.t == 0 and prev in out:
        out[prev] = out[prev].subtract(FracSet.point(Fraction(1)))
    return out
