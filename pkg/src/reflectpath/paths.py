"""Backward path extraction from a finished mirror system, and validation.

Extraction walks layers k..1: scan the reflecting chains backward from the
current point, take the first mirror with a feasible window, and place the
turning point where the tangent ray from the current point meets that mirror
(falling back to the nearest feasible window point, with midpoint bisection,
when the ray lands outside the window).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExtractionFailed, InternalInconsistency
from .geom import (Orientation, Point, line_intersection, on_segment,
                   orient_sign, param_on_segment, point_between,
                   segment_intersection)
from .intervals import FracSet
from .mirrors import Mirror, MirrorSystem, _Builder, _global_pos
from .region import Frame, TurnSite


class ReflectionPath:
    """A diffuse-reflection path with per-turn metadata."""

    __slots__ = ("points", "sites", "layers", "turn_dirs", "crossings")

    def __init__(self, points: list[Point], sites: list[TurnSite],
                 layers: list[int]):
        self.points = points          # s, z_1..z_p, t
        self.sites = sites            # one per turning point
        self.layers = layers          # layer index per turning point
        self.turn_dirs: list[Orientation] = [
            Orientation(orient_sign(points[i - 1], points[i], points[i + 1]))
            for i in range(1, len(points) - 1)
        ]
        self.crossings: list[tuple[int, int, Point]] = []

    @property
    def turns(self) -> int:
        return len(self.points) - 2

    def __repr__(self):
        coords = ", ".join(f"({p.x}, {p.y})" for p in self.points)
        return f"ReflectionPath[{coords}]"


class ValidityReport:
    __slots__ = ("ok", "failures", "crossings")

    def __init__(self, ok: bool, failures: list[tuple[str, str]],
                 crossings: list[tuple[int, int, Point]]):
        self.ok = ok
        self.failures = failures
        self.crossings = crossings

    def codes(self) -> set[str]:
        return {c for c, _ in self.failures}

    def __repr__(self):
        return f"ValidityReport(ok={self.ok}, failures={self.failures})"


# ---------------------------------------------------------------- extraction

def extract_path(system: MirrorSystem) -> ReflectionPath:
    frame = system.frame
    if system.termination is None:
        raise InternalInconsistency("mirror system not finished")
    if system.termination.status == "direct":
        return ReflectionPath([frame.s, frame.t], [], [])
    if system.termination.status != "target_visible":
        raise ExtractionFailed("no constrained path to extract")

    builder = _Builder(frame)
    k = system.termination.k
    cur_pt = frame.t
    cur_site: TurnSite | None = None
    cur_is_t = True
    rev_points: list[Point] = [frame.t]
    rev_sites: list[TurnSite] = []

    for layer_idx in range(k, 0, -1):
        candidates: list[tuple[Mirror, FracSet]] = []
        if layer_idx == k:
            for mid, w in system.termination.witnesses:
                candidates.append((system.mirror(mid), w))
        else:
            for m in system.layers[layer_idx - 1]:
                w = builder.feasible_on_mirror(m, cur_pt, cur_site, cur_is_t)
                if not w.is_empty():
                    candidates.append((m, w))
        if not candidates:
            raise ExtractionFailed(
                f"no feasible mirror at layer {layer_idx}")
        mirror, window = _scan_backward_choice(frame, candidates)
        param = _place_turn(frame, cur_pt, cur_site, cur_is_t, mirror, window)
        site = frame.site(mirror.stage, mirror.edge, param)
        rev_points.append(site.point)
        rev_sites.append(site)
        cur_pt, cur_site, cur_is_t = site.point, site, False

    if not frame.link_ok(frame.s, None, cur_pt, cur_site, x_is_source=True):
        raise ExtractionFailed("source link infeasible after extraction")
    rev_points.append(frame.s)
    points = list(reversed(rev_points))
    sites = list(reversed(rev_sites))
    path = ReflectionPath(points, sites, list(range(1, k + 1)))
    report = validate_path(points, frame)
    if not report.ok:
        raise ExtractionFailed(f"extracted path fails validation: {report.failures}")
    path.crossings = report.crossings
    return path


def _scan_backward_choice(frame: Frame, candidates):
    """First mirror met when scanning the chains backward from the target."""
    def sort_key(rec):
        m, w = rec
        chain = frame.stages[m.stage].chain
        b = w.bounds()
        p0 = chain.position_of_edge_t(m.edge, b[0])
        p1 = chain.position_of_edge_t(m.edge, b[1])
        return _global_pos(frame, m.stage, max(p0, p1))

    return max(candidates, key=sort_key)


def _chain_earlier_param(frame: Frame, m: Mirror, window: FracSet) -> Fraction:
    chain = frame.stages[m.stage].chain
    b = window.bounds()
    p0 = chain.position_of_edge_t(m.edge, b[0])
    p1 = chain.position_of_edge_t(m.edge, b[1])
    return b[0] if p0 <= p1 else b[1]


def _place_turn(frame: Frame, from_pt: Point, from_site: TurnSite | None,
                from_is_t: bool, m: Mirror, window: FracSet) -> Fraction:
    ea, eb = frame.polygon.edge(m.edge)
    v_param = _chain_earlier_param(frame, m, window)
    v = point_between(ea, eb, v_param)
    ray_param: Fraction | None = None
    if v != from_pt:
        sp_tv = frame.solver.shortest_path(from_pt, v)
        nxt = sp_tv[1]
        hit = line_intersection(from_pt, nxt, ea, eb)
        if hit is not None and nxt != from_pt:
            along = param_on_segment(hit, from_pt, nxt)
            if along >= 1:
                u = param_on_segment(hit, ea, eb)
                if 0 <= u <= 1:
                    ray_param = u
    if ray_param is not None and window.contains(ray_param):
        return ray_param

    # nearest feasible window point by chain position (param distance on
    # one edge is an affine image of position distance)
    target = ray_param if ray_param is not None else v_param
    best_iv = None
    best_d = None
    for iv in window.intervals():
        if iv.lo <= target <= iv.hi:
            d = Fraction(0)
        else:
            d = min(abs(iv.lo - target), abs(iv.hi - target))
        if best_d is None or d < best_d:
            best_iv, best_d = iv, d
    assert best_iv is not None
    if best_iv.lo <= target <= best_iv.hi:
        cand = target
    elif target < best_iv.lo:
        cand = best_iv.lo if best_iv.lo_closed else None
    else:
        cand = best_iv.hi if best_iv.hi_closed else None

    lo, hi = best_iv.lo, best_iv.hi
    for _ in range(frame.polygon.n + 1):
        if cand is not None and window.contains(cand):
            site = frame.site(m.stage, m.edge, cand)
            if frame.link_ok(site.point, site, from_pt, from_site,
                             y_is_target=from_is_t):
                return cand
        cand = (lo + hi) / 2
        if target <= cand:
            hi = cand
        else:
            lo = cand
    raise ExtractionFailed("bisection failed to realize a turning point")


# ---------------------------------------------------------------- validation

def validate_path(points: list[Point], frame: Frame) -> ValidityReport:
    """Check the constrained diffuse-reflection conditions for a path."""
    failures: list[tuple[str, str]] = []
    crossings: list[tuple[int, int, Point]] = []
    P = frame.polygon

    def fail(code: str, msg: str) -> None:
        failures.append((code, msg))

    if len(points) < 2 or points[0] != frame.s or points[-1] != frame.t:
        fail("endpoints", "path must run from the source to the target")
        return ValidityReport(False, failures, crossings)

    links = [(points[i], points[i + 1]) for i in range(len(points) - 1)]
    turn_hosts: list[tuple[int, Fraction] | None] = []

    for a, b in links:
        if not P.segment_inside(a, b):
            fail("link-outside", f"link ({a.x},{a.y})-({b.x},{b.y}) leaves the polygon")

    for z in points[1:-1]:
        bp = P.locate_on_boundary(z)
        if bp is None:
            fail("turn-off-boundary", f"turning point ({z.x},{z.y}) not on the boundary")
            turn_hosts.append(None)
        elif bp.at_vertex():
            fail("turn-at-vertex", f"turning point ({z.x},{z.y}) sits on a vertex (absorbed)")
            turn_hosts.append(None)
        else:
            turn_hosts.append((bp.edge, bp.t))

    for i, host in enumerate(turn_hosts):
        if host is None:
            continue
        ea, eb = P.edge(host[0])
        if orient_sign(ea, eb, points[i]) == 0:
            fail("collinear-arrival", f"link into turn {i + 1} runs along its edge")
        if orient_sign(ea, eb, points[i + 2]) == 0:
            fail("collinear-departure", f"link out of turn {i + 1} runs along its edge")

    for i in range(len(links)):
        for j in range(i + 1, len(links)):
            inter = segment_intersection(*links[i], *links[j])
            if j == i + 1:
                if inter.kind == "overlap":
                    fail("backtrack", f"links {i} and {j} overlap")
                elif inter.kind == "proper" or (
                        inter.kind == "touch" and inter.point != points[i + 1]):
                    fail("self-intersection", f"links {i} and {j} meet off their joint")
            elif inter.kind != "none":
                fail("self-intersection", f"links {i} and {j} intersect")

    for wa, wb in frame.walls:
        for li, (a, b) in enumerate(links):
            inter = segment_intersection(a, b, wa, wb)
            if inter.kind == "none":
                continue
            if inter.kind == "overlap" and {a, b} == {wa, wb}:
                continue  # zero-turn path: the link IS the straight geodesic
            if inter.kind == "touch":
                if inter.point == frame.s and a == frame.s:
                    continue
                if inter.point == frame.t and b == frame.t:
                    continue
            fail("sp-contact", f"link {li} meets a non-gate path edge")

    eave_parity: list[int] = []
    for g in frame.gates:
        count = 0
        for li, (a, b) in enumerate(links):
            inter = segment_intersection(a, b, g.near, g.far)
            if inter.kind == "proper":
                count += 1
                crossings.append((g.index, li, inter.point))
            elif inter.kind == "overlap":
                fail("gate-overlap", f"link {li} runs along gate {g.index}")
        if count != 1:
            fail("gate-count", f"gate {g.index} crossed {count} times (want 1)")
    del eave_parity

    # turn-direction discipline: constant between crossings, flips per gate
    link_flips = [0] * len(links)
    for _, li, _pt in crossings:
        link_flips[li] += 1
    dirs = [orient_sign(points[i - 1], points[i], points[i + 1])
            for i in range(1, len(points) - 1)]
    if any(d == 0 for d in dirs):
        fail("straight-turn", "zero-angle turning point")
    expect = None
    for i, d in enumerate(dirs):
        if d == 0:
            continue
        flips = link_flips[i]  # crossings on the link arriving at turn i+1
        if expect is not None and flips % 2 == 0 and d != expect:
            fail("turn-direction", f"turn {i + 1} breaks unidirectional stretch")
        if expect is not None and flips % 2 == 1 and d == expect:
            fail("turn-direction", f"turn {i + 1} fails to reverse across a gate")
        expect = d

    # forward ordering along each stage chain
    stage_idx = 0
    prev_pos: Fraction | None = None
    for i, host in enumerate(turn_hosts):
        if host is None:
            continue
        stage_idx_new = stage_idx + link_flips[i]
        if stage_idx_new != stage_idx:
            prev_pos = None
            stage_idx = stage_idx_new
        if stage_idx >= len(frame.stages):
            fail("gate-order", "more gate crossings than stages")
            break
        chain = frame.stages[stage_idx].chain
        pos = chain.position(P.boundary_point(host[0], host[1]))
        if pos > chain.length:
            fail("chain-side", f"turn {i + 1} lies off the stage-{stage_idx} chain")
        elif prev_pos is not None and pos <= prev_pos:
            fail("chain-order", f"turn {i + 1} goes backward along the chain")
        else:
            prev_pos = pos

    return ValidityReport(not failures, failures, crossings)


class SolveResult:
    """Outcome of a full solve: verdict plus the artifacts behind it."""

    __slots__ = ("status", "k", "path", "system", "frame")

    def __init__(self, status: str, k: int | None, path: ReflectionPath | None,
                 system: MirrorSystem, frame: Frame):
        self.status = status      # "path" | "no-cdrp"
        self.k = k                # minimum turn count when status == "path"
        self.path = path
        self.system = system
        self.frame = frame

    def __repr__(self):
        return f"SolveResult({self.status!r}, k={self.k})"


def solve_instance(inst, layer_cap: int | None = None) -> SolveResult:
    """Run the mirror construction on an instance and extract a witness path."""
    from .mirrors import run

    frame = Frame(inst.polygon, inst.source, inst.target)
    system = run(frame, layer_cap=layer_cap)
    status = system.termination.status
    if status == "direct":
        path = ReflectionPath([frame.s, frame.t], [], [])
        report = validate_path(path.points, frame)
        if not report.ok:
            raise InternalInconsistency(
                "direct path fails validation: " +
                "; ".join(code for code, _ in report.failures))
        return SolveResult("path", 0, path, system, frame)
    if status == "target_visible":
        path = extract_path(system)
        report = validate_path(path.points, frame)
        if not report.ok:
            raise InternalInconsistency(
                "extracted path fails validation: " +
                "; ".join(code for code, _ in report.failures))
        return SolveResult("path", system.termination.k, path, system, frame)
    if status == "exhausted":
        return SolveResult("no-cdrp", None, None, system, frame)
    raise InternalInconsistency(f"unknown termination status {status!r}")
