"""Reference computations that certify the mirror engine from first definitions.

Everything here is deliberately redundant with the engine: slower, simpler,
and derived directly from the path definitions, so the two sides can be
checked against each other in tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, InternalInconsistency
from .geom import Point, point_between, segment_intersection, param_on_segment
from .instances import Instance
from .intervals import FracSet
from .polygon import OUTSIDE, Polygon
from .region import Frame
from .paths import validate_path
from .visibility import (
    visible_params,
    weak_visible_params,
    window_sample_points,
)


def _default_budget() -> int:
    return int(os.environ.get("REFLECTPATH_ORACLE_BUDGET", "20000"))


def _full01() -> FracSet:
    return FracSet.interval(Fraction(0), Fraction(1), True, True)


def _open01() -> FracSet:
    return FracSet.interval(Fraction(0), Fraction(1), False, False)


@dataclass(frozen=True)
class Unreached:
    """Target not illuminated within the reflection cap."""

    kmax: int


@dataclass(frozen=True)
class NoCdrp:
    """Exhaustive search found no valid constrained path up to the cap."""

    kmax: int


def drp_opt_oracle(inst: Instance, kmax: int | None = None):
    """Minimum number of diffuse reflections from s to t, unconstrained.

    Turning points live in open edge interiors; paths may self-intersect and
    may touch the geodesic freely.  Fronts are kept first-reach disjoint so
    the optimum is a plain breadth-first depth.
    """
    P, s, t = inst.polygon, inst.source, inst.target
    if P.segment_inside(s, t):
        return 0
    if kmax is None:
        kmax = P.n
    open01 = _open01()

    sfoot = [visible_params(P, s, *P.edge(e)) for e in range(P.n)]
    tfoot = [visible_params(P, t, *P.edge(e)) for e in range(P.n)]

    front = [sfoot[e].intersect(open01) for e in range(P.n)]
    covered = list(front)
    if any(not front[e].intersect(tfoot[e]).is_empty() for e in range(P.n)):
        return 1

    for r in range(2, kmax + 1):
        # Detection probe: does the next front reach any t-visible piece?
        for f in range(P.n):
            win = tfoot[f].intersect(open01).subtract(covered[f])
            if win.is_empty():
                continue
            fa, fb = P.edge(f)
            for e in range(P.n):
                if e == f or front[e].is_empty():
                    continue
                ea, eb = P.edge(e)
                hit = weak_visible_params(P, ea, eb, front[e], fa, fb, win)
                if not hit.is_empty():
                    return r
        if r == kmax:
            break
        # Full propagation for the next front.
        nxt = [FracSet.empty() for _ in range(P.n)]
        for e in range(P.n):
            if front[e].is_empty():
                continue
            ea, eb = P.edge(e)
            for f in range(P.n):
                if f == e:
                    continue
                fa, fb = P.edge(f)
                grow = weak_visible_params(P, ea, eb, front[e], fa, fb,
                                           open01.subtract(covered[f]))
                if not grow.is_empty():
                    nxt[f] = nxt[f].union(grow)
        front = []
        alive = False
        for f in range(P.n):
            g = nxt[f].subtract(covered[f])
            front.append(g)
            covered[f] = covered[f].union(g)
            alive = alive or not g.is_empty()
        if not alive:
            return Unreached(kmax)
    return Unreached(kmax)


def _geodesic_contact_params(P: Polygon, edge: int, sp: list[Point]) -> FracSet:
    """Edge params touched by the geodesic polyline (excluded turn spots)."""
    a, b = P.edge(edge)
    out = FracSet.empty()
    for i in range(len(sp) - 1):
        hit = segment_intersection(a, b, sp[i], sp[i + 1])
        if hit.kind == "none":
            continue
        if hit.kind == "overlap":
            u0 = param_on_segment(hit.overlap[0], a, b)
            u1 = param_on_segment(hit.overlap[1], a, b)
            lo, hi = (u0, u1) if u0 <= u1 else (u1, u0)
            out = out.union(FracSet.interval(lo, hi, True, True))
        else:
            out = out.union(FracSet.point(param_on_segment(hit.point, a, b)))
    return out


class _CdrpSearch:
    """Iterative-deepening enumeration over reflecting-edge sequences."""

    def __init__(self, inst: Instance, kmax: int, budget: int):
        self.P = inst.polygon
        self.s = inst.source
        self.t = inst.target
        self.kmax = kmax
        self.budget = budget
        self.spent = 0
        self.frame = Frame(self.P, self.s, self.t)
        sp = self.frame.sp
        open01 = _open01()
        self.legal = [
            open01.subtract(_geodesic_contact_params(self.P, e, sp))
            for e in range(self.P.n)
        ]
        self.sfoot = [
            visible_params(self.P, self.s, *self.P.edge(e)).intersect(self.legal[e])
            for e in range(self.P.n)
        ]
        self.tfoot = [visible_params(self.P, self.t, *self.P.edge(e))
                      for e in range(self.P.n)]
        self.fronts: dict[tuple[int, ...], FracSet] = {}

    def _charge(self, units: int = 1) -> None:
        self.spent += units
        if self.spent > self.budget:
            raise BudgetExceeded(
                "constrained-path enumeration exceeded its budget",
                partial={"expansions": self.spent},
            )

    def front(self, seq: tuple[int, ...]) -> FracSet:
        got = self.fronts.get(seq)
        if got is not None:
            return got
        if len(seq) == 1:
            out = self.sfoot[seq[0]]
        else:
            prev = self.front(seq[:-1])
            if prev.is_empty():
                out = FracSet.empty()
            else:
                self._charge(4)
                ea, eb = self.P.edge(seq[-2])
                fa, fb = self.P.edge(seq[-1])
                out = weak_visible_params(self.P, ea, eb, prev, fa, fb,
                                          self.legal[seq[-1]])
        self.fronts[seq] = out
        return out

    def _detect(self, seq: tuple[int, ...]) -> FracSet:
        """Portion of the final front that also sees t (cheap, unmemoized)."""
        last = seq[-1]
        win = self.tfoot[last].intersect(self.legal[last])
        if win.is_empty():
            return FracSet.empty()
        if len(seq) == 1:
            return self.sfoot[last].intersect(win)
        prev = self.front(seq[:-1])
        if prev.is_empty():
            return FracSet.empty()
        self._charge(2)
        ea, eb = self.P.edge(seq[-2])
        fa, fb = self.P.edge(last)
        return weak_visible_params(self.P, ea, eb, prev, fa, fb, win)

    def _witness(self, seq: tuple[int, ...], final: FracSet) -> list[Point] | None:
        """Try to realize a validated path for the given edge sequence."""
        tries = 0

        def rec(i: int, nxt: Point, acc: list[Point]) -> list[Point] | None:
            nonlocal tries
            if i < 0:
                pts = [self.s] + acc + [self.t]
                tries += 1
                report = validate_path(pts, self.frame)
                return pts if report.ok else None
            if i == len(seq) - 1:
                window = final
            else:
                window = self.front(seq[: i + 1])
            a, b = self.P.edge(seq[i])
            cands = visible_params(self.P, nxt, a, b, window)
            for p in window_sample_points(a, b, cands)[:4]:
                if tries >= 32:
                    return None
                got = rec(i - 1, p, [p] + acc)
                if got is not None:
                    return got
            return None

        return rec(len(seq) - 1, self.t, [])

    def run(self):
        if self.P.segment_inside(self.s, self.t):
            return 0, [self.s, self.t]
        for depth in range(1, self.kmax + 1):
            found = self._scan(depth, ())
            if found is not None:
                return depth, found
        return NoCdrp(self.kmax), None

    def _scan(self, depth: int, prefix: tuple[int, ...]) -> list[Point] | None:
        if len(prefix) == depth:
            final = self._detect(prefix)
            if final.is_empty():
                return None
            return self._witness(prefix, final)
        for e in range(self.P.n):
            if prefix and e == prefix[-1]:
                continue
            seq = prefix + (e,)
            self._charge()
            if len(seq) < depth and self.front(seq).is_empty():
                continue
            if len(seq) == 1 and self.sfoot[e].is_empty():
                continue
            got = self._scan(depth, seq)
            if got is not None:
                return got
        return None


def cdrp_opt_oracle(inst: Instance, kmax: int | None = None,
                    budget: int | None = None):
    """Minimum turn count over all valid constrained paths, by enumeration.

    Feasible interval sets are forward-propagated per reflecting-edge
    sequence (a relaxation); a depth is accepted only when a concrete
    witness passes the full path validator.  Exponential — small n only.
    """
    if kmax is None:
        kmax = inst.polygon.n
    if budget is None:
        budget = _default_budget()
    opt, _ = _CdrpSearch(inst, kmax, budget).run()
    return opt


def cdrp_witness(inst: Instance, kmax: int | None = None,
                 budget: int | None = None):
    """Like cdrp_opt_oracle but also returns the validated witness path."""
    if kmax is None:
        kmax = inst.polygon.n
    if budget is None:
        budget = _default_budget()
    return _CdrpSearch(inst, kmax, budget).run()


# --- minimum link paths -----------------------------------------------------


@dataclass
class LinkPath:
    links: int
    points: list[Point]


class _Chord:
    __slots__ = ("a", "b", "parent")

    def __init__(self, a: Point, b: Point, parent: "_Chord | None"):
        self.a = a
        self.b = b
        self.parent = parent

    def key(self):
        ka = (self.a.x, self.a.y)
        kb = (self.b.x, self.b.y)
        return (ka, kb) if ka <= kb else (kb, ka)


def _footprint_gaps(P: Polygon, foots: list[FracSet]) -> list[tuple[Fraction, Fraction]]:
    """Cyclic boundary stretches not covered by the per-edge footprint."""
    covered = FracSet.empty()
    for e in range(P.n):
        for iv in foots[e].intervals():
            covered = covered.union(
                FracSet.interval(e + iv.lo, e + iv.hi, True, True))
    whole = FracSet.interval(Fraction(0), Fraction(P.n), True, True)
    gaps = [(iv.lo, iv.hi) for iv in whole.subtract(covered).intervals()
            if iv.lo < iv.hi]
    if len(gaps) >= 2 and gaps[0][0] == 0 and gaps[-1][1] == P.n:
        first = gaps.pop(0)
        gaps[-1] = (gaps[-1][0], first[1] + P.n)
    elif len(gaps) == 1 and gaps[0][0] == 0 and gaps[0][1] == P.n:
        raise InternalInconsistency("nothing on the boundary is visible")
    return gaps


def _gap_chords(P: Polygon, foots: list[FracSet], parent: "_Chord | None") -> list[_Chord]:
    out = []
    for lo, hi in _footprint_gaps(P, foots):
        a = P.boundary_point_at_u(Fraction(lo) % P.n).point
        b = P.boundary_point_at_u(Fraction(hi) % P.n).point
        if a != b:
            out.append(_Chord(a, b, parent))
    return out


def _pick_param(window: FracSet) -> Fraction:
    best = None
    for iv in window.intervals():
        width = iv.hi - iv.lo
        if best is None or width > best[0]:
            best = (width, (iv.lo + iv.hi) / 2)
    if best is None:
        raise InternalInconsistency("empty window in link-path backchain")
    return best[1]


def minimum_link_path(inst: Instance, cap: int = 20000) -> LinkPath:
    """Fewest-link polyline from s to t; turns anywhere in the closure.

    Breadth-first search over visibility windows: the first region is what s
    sees; each window chord spawns the region weakly visible from it.  The
    first depth whose region contains t is the link count.
    """
    P, s, t = inst.polygon, inst.source, inst.target
    if P.segment_inside(s, t):
        return LinkPath(1, [s, t])
    full = _full01()

    sfoot = [visible_params(P, s, *P.edge(e)) for e in range(P.n)]
    frontier = _gap_chords(P, sfoot, None)
    seen = {c.key() for c in frontier}
    depth = 2
    expansions = 0
    while frontier:
        for chord in frontier:
            window = visible_params(P, t, chord.a, chord.b)
            if not window.is_empty():
                return LinkPath(depth, _backchain(P, s, t, chord, window))
        nxt: list[_Chord] = []
        for chord in frontier:
            expansions += 1
            if expansions > cap:
                raise InternalInconsistency("window search exceeded its cap")
            wfoot = [weak_visible_params(P, chord.a, chord.b, full, *P.edge(e))
                     for e in range(P.n)]
            for child in _gap_chords(P, wfoot, chord):
                if child.key() not in seen:
                    seen.add(child.key())
                    nxt.append(child)
        frontier = nxt
        depth += 1
        if depth > P.n + 2:
            raise InternalInconsistency("link depth exceeded polygon size")
    raise InternalInconsistency("window frontier emptied before reaching t")


def _backchain(P: Polygon, s: Point, t: Point, chord: _Chord,
               window: FracSet) -> list[Point]:
    pts = [point_between(chord.a, chord.b, _pick_param(window))]
    node = chord.parent
    while node is not None:
        vis = visible_params(P, pts[0], node.a, node.b)
        pts.insert(0, point_between(node.a, node.b, _pick_param(vis)))
        node = node.parent
    out = [s] + pts + [t]
    for i in range(len(out) - 1):
        if not P.segment_inside(out[i], out[i + 1]):
            raise InternalInconsistency("link-path witness link exits polygon")
    return out


def link_count_staged_regions(inst: Instance, cap: int = 4000) -> int:
    """Brute cross-check of the link count via explicit staged regions.

    Regions are assembled as concrete polygons (visible boundary pieces
    joined by window chords) and membership of t is decided by containment
    rather than by visibility queries.  Small n only.
    """
    P, s, t = inst.polygon, inst.source, inst.target
    full = _full01()

    sfoot = [visible_params(P, s, *P.edge(e)) for e in range(P.n)]
    regions = [_assemble_region(P, sfoot)]
    if any(r.contains(t) != OUTSIDE for r in regions):
        return 1
    frontier = _gap_chords(P, sfoot, None)
    seen = {c.key() for c in frontier}
    depth = 2
    expansions = 0
    while frontier:
        nxt: list[_Chord] = []
        hit = False
        for chord in frontier:
            expansions += 1
            if expansions > cap:
                raise InternalInconsistency("staged-region search exceeded cap")
            wfoot = [weak_visible_params(P, chord.a, chord.b, full, *P.edge(e))
                     for e in range(P.n)]
            region = _assemble_region(P, wfoot)
            if region.contains(t) != OUTSIDE:
                hit = True
            for child in _gap_chords(P, wfoot, chord):
                if child.key() not in seen:
                    seen.add(child.key())
                    nxt.append(child)
        if hit:
            return depth
        frontier = nxt
        depth += 1
        if depth > P.n + 2:
            raise InternalInconsistency("staged-region depth exceeded size")
    raise InternalInconsistency("staged regions emptied before reaching t")


def _assemble_region(P: Polygon, foots: list[FracSet]) -> Polygon:
    """Region polygon: visible boundary pieces joined by window chords."""
    covered = FracSet.empty()
    for e in range(P.n):
        for iv in foots[e].intervals():
            if iv.lo < iv.hi:
                covered = covered.union(
                    FracSet.interval(e + iv.lo, e + iv.hi, True, True))
    pieces = [iv for iv in covered.intervals() if iv.lo < iv.hi]
    if not pieces:
        raise InternalInconsistency("footprint has no extended pieces")
    verts: list[Point] = []
    for iv in pieces:
        us = [iv.lo]
        k = int(iv.lo) + 1
        while k < iv.hi:
            us.append(Fraction(k))
            k += 1
        us.append(iv.hi)
        for u in us:
            p = P.boundary_point_at_u(Fraction(u) % P.n).point
            if not verts or verts[-1] != p:
                verts.append(p)
    if len(verts) >= 2 and verts[0] == verts[-1]:
        verts.pop()
    cleaned = _drop_straight(verts)
    if len(cleaned) < 3:
        raise InternalInconsistency("degenerate staged region")
    return Polygon(cleaned)


def _drop_straight(verts: list[Point]) -> list[Point]:
    from .geom import orient_sign

    out = list(verts)
    changed = True
    while changed and len(out) >= 3:
        changed = False
        for i in range(len(out)):
            a = out[i - 1]
            b = out[i]
            c = out[(i + 1) % len(out)]
            if orient_sign(a, b, c) == 0:
                out.pop(i)
                changed = True
                break
    return out
