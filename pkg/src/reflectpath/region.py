"""Problem frame: stage decomposition along the shortest path.

The shortest path's inflection edges split the polygon into stages joined by
gates.  Each stage has one reflecting boundary chain (on the side the path
turns toward), split into entry-pocket / core / exit-pocket pieces by the
gate-extension feet.  Admissible turning-point intervals are computed per
edge with exact cut-and-test interval refinement.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError, InternalInconsistency
from .geodesic import GeodesicSolver, detect_eaves, turn_directions
from .geom import (Orientation, Point, on_segment, orient_sign, point_between,
                   segment_intersection)
from .intervals import FracSet
from .polygon import BoundaryChain, BoundaryPoint, Polygon, chain_interval_set
from .visibility import pairwise_cut_params, refine_params, visible_params


class Gate:
    """An inflection edge of the shortest path, acting as a crossing gate."""

    __slots__ = ("index", "near", "far", "sp_edge")

    def __init__(self, index: int, near: Point, far: Point, sp_edge: int):
        self.index = index
        self.near = near  # endpoint on the source side of the path
        self.far = far
        self.sp_edge = sp_edge

    def __repr__(self):
        return f"Gate({self.index}, {self.near!r}->{self.far!r})"


class Piece:
    __slots__ = ("kind", "lo", "hi")

    def __init__(self, kind: str, lo: Fraction, hi: Fraction):
        self.kind = kind  # entry | core | exit
        self.lo = lo
        self.hi = hi

    def __repr__(self):
        return f"Piece({self.kind}, [{self.lo}, {self.hi}])"


class Stage:
    __slots__ = ("index", "chirality", "sub_path", "chain", "entry_gate",
                 "exit_gate", "entry_foot", "exit_foot", "pieces")

    def __init__(self, index: int, chirality: Orientation, sub_path: list[Point],
                 chain: BoundaryChain, entry_gate: Gate | None, exit_gate: Gate | None):
        self.index = index
        self.chirality = chirality
        self.sub_path = sub_path
        self.chain = chain
        self.entry_gate = entry_gate
        self.exit_gate = exit_gate
        self.entry_foot: BoundaryPoint | None = None
        self.exit_foot: BoundaryPoint | None = None
        self.pieces: list[Piece] = []


class TurnSite:
    """A candidate or actual turning point with its stage/chain context."""

    __slots__ = ("point", "stage", "edge", "param", "chain_pos")

    def __init__(self, point: Point, stage: int, edge: int, param: Fraction,
                 chain_pos: Fraction):
        self.point = point
        self.stage = stage
        self.edge = edge
        self.param = param
        self.chain_pos = chain_pos

    def __repr__(self):
        return f"TurnSite({self.point!r}, stage={self.stage}, edge={self.edge})"


class Frame:
    """All derived structure for one (polygon, source, target) problem."""

    def __init__(self, polygon: Polygon, s: Point, t: Point,
                 solver: GeodesicSolver | None = None):
        if s == t:
            raise InputError("source and target coincide")
        self.polygon = polygon
        self.s = s
        self.t = t
        self.solver = solver or GeodesicSolver(polygon)
        self.sp = self.solver.shortest_path(s, t)
        self.direct = len(self.sp) == 2
        self.turns = turn_directions(self.sp)
        eave_edges = detect_eaves(polygon, self.sp)
        self.gates = [Gate(i, self.sp[e], self.sp[e + 1], e)
                      for i, e in enumerate(eave_edges)]
        eave_set = set(eave_edges)
        self.walls = [(self.sp[i], self.sp[i + 1])
                      for i in range(len(self.sp) - 1) if i not in eave_set]
        self.reflex_points = [polygon.vertices[i] for i in polygon.reflex_vertex_indices()]
        self.anchors = self._build_anchors()
        self.stages: list[Stage] = []
        self._admissible: list[dict[int, FracSet]] | None = None
        if not self.direct:
            self._build_stages()

    # ---------------- structure ----------------

    def _build_anchors(self) -> list[Point]:
        anchors = [self.s, self.t]
        anchors.extend(self.reflex_points)
        for g in self.gates:
            for p in (g.near, g.far):
                if p not in anchors:
                    anchors.append(p)
        return anchors

    def _endpoint_anchor(self, p: Point, fallback: Point) -> BoundaryPoint:
        bp = self.polygon.locate_on_boundary(p)
        if bp is not None:
            return bp
        bp = self.polygon.locate_on_boundary(fallback)
        if bp is None:
            raise InternalInconsistency("path vertex not on the boundary")
        return bp

    def _build_stages(self) -> None:
        sp, turns = self.sp, self.turns
        m = len(sp) - 2  # number of interior path vertices
        if m == 0:
            raise InternalInconsistency("non-direct path without interior vertices")
        start_bp = self._endpoint_anchor(self.s, sp[1])
        end_bp = self._endpoint_anchor(self.t, sp[-2])
        n_stages = len(self.gates) + 1
        for j in range(n_stages):
            entry = self.gates[j - 1] if j > 0 else None
            exit_ = self.gates[j] if j < len(self.gates) else None
            a_idx = entry.sp_edge + 1 if entry else 0
            b_idx = exit_.sp_edge if exit_ else len(sp) - 1
            sub_path = sp[a_idx:b_idx + 1]
            turn_lo = max(a_idx, 1)
            turn_hi = min(b_idx, len(sp) - 2)
            stage_turns = {turns[i - 1] for i in range(turn_lo, turn_hi + 1)}
            stage_turns.discard(Orientation.COLLINEAR)
            if len(stage_turns) != 1:
                raise InternalInconsistency(
                    f"stage {j} has mixed or missing turn directions: {stage_turns}")
            chirality = stage_turns.pop()
            c_start = (self.polygon.locate_on_boundary(entry.near)
                       if entry else start_bp)
            c_end = (self.polygon.locate_on_boundary(exit_.far)
                     if exit_ else end_bp)
            if c_start is None or c_end is None:
                raise InternalInconsistency("gate endpoint not on the boundary")
            ccw = chirality == Orientation.LEFT
            full = c_start == c_end
            chain = BoundaryChain(self.polygon, c_start, c_end, ccw=ccw,
                                  name=f"stage{j}", full_loop=full)
            stage = Stage(j, chirality, sub_path, chain, entry, exit_)
            self.stages.append(stage)
        for stage in self.stages:
            self._place_feet(stage)
            self._build_pieces(stage)

    def _place_feet(self, stage: Stage) -> None:
        if stage.entry_gate is not None:
            g = stage.entry_gate
            foot = self.polygon.ray_first_boundary_hit(g.near, g.far, t_min=Fraction(1))
            if foot is None:
                raise InternalInconsistency("gate extension misses the boundary")
            pos = stage.chain.position(foot)
            if pos > stage.chain.length:
                raise InternalInconsistency("entry foot off the stage chain")
            stage.entry_foot = foot
        if stage.exit_gate is not None:
            g = stage.exit_gate
            foot = self.polygon.ray_first_boundary_hit(g.far, g.near, t_min=Fraction(1))
            if foot is None:
                raise InternalInconsistency("gate extension misses the boundary")
            pos = stage.chain.position(foot)
            if pos > stage.chain.length:
                raise InternalInconsistency("exit foot off the stage chain")
            stage.exit_foot = foot

    def _build_pieces(self, stage: Stage) -> None:
        chain = stage.chain
        lo = Fraction(0)
        hi = chain.length
        p_in = chain.position(stage.entry_foot) if stage.entry_foot else None
        p_out = chain.position(stage.exit_foot) if stage.exit_foot else None
        if p_in is not None:
            stage.pieces.append(Piece("entry", lo, p_in))
        core_lo = p_in if p_in is not None else lo
        core_hi = p_out if p_out is not None else hi
        if core_lo <= core_hi:
            stage.pieces.append(Piece("core", core_lo, core_hi))
        if p_out is not None:
            stage.pieces.append(Piece("exit", p_out, hi))

    # ---------------- membership predicates ----------------

    def _parent_on(self, root: Point, z: Point, path_points: list[Point]) -> bool:
        if z == root:
            return True
        parent = self.solver.parent_toward(root, z)
        for i in range(len(path_points) - 1):
            if on_segment(parent, path_points[i], path_points[i + 1]):
                return True
        return len(path_points) == 1 and parent == path_points[0]

    def _sees_gate(self, z: Point, gate: Gate) -> bool:
        return not visible_params(self.polygon, z, gate.near, gate.far).is_empty()

    def _piece_predicate(self, stage: Stage, piece: Piece):
        a_root = stage.sub_path[0]
        b_root = stage.sub_path[-1]
        w = stage.sub_path

        if piece.kind == "core":
            def pred(z: Point) -> bool:
                return self._parent_on(a_root, z, w) and self._parent_on(b_root, z, w)
        elif piece.kind == "entry":
            gate = stage.entry_gate
            def pred(z: Point) -> bool:
                return self._parent_on(b_root, z, w) and self._sees_gate(z, gate)
        else:
            gate = stage.exit_gate
            def pred(z: Point) -> bool:
                return self._parent_on(a_root, z, w) and self._sees_gate(z, gate)
        return pred

    # ---------------- admissible interval sets ----------------

    @property
    def admissible(self) -> list[dict[int, FracSet]]:
        if self._admissible is None:
            self._admissible = [self._stage_admissible(st) for st in self.stages]
        return self._admissible

    def _stage_admissible(self, stage: Stage) -> dict[int, FracSet]:
        out: dict[int, FracSet] = {}
        for piece in stage.pieces:
            windows = chain_interval_set(stage.chain, piece.lo, piece.hi)
            pred = self._piece_predicate(stage, piece)
            for edge, window in windows.items():
                if window.is_empty():
                    continue
                ea, eb = self.polygon.edge(edge)
                cuts = pairwise_cut_params(ea, eb, self.anchors)

                def point_pred(u: Fraction, ea=ea, eb=eb, pred=pred) -> bool:
                    return pred(point_between(ea, eb, u))

                got = refine_params(window, cuts, point_pred)
                if not got.is_empty():
                    out[edge] = out.get(edge, FracSet.empty()).union(got)
        for edge in list(out):
            out[edge] = self._strip_forbidden(edge, out[edge])
            if out[edge].is_empty():
                del out[edge]
        return out

    def _strip_forbidden(self, edge: int, fset: FracSet) -> FracSet:
        """Remove vertices, path-endpoint spots, and path-edge overlaps."""
        ea, eb = self.polygon.edge(edge)
        fset = fset.subtract(FracSet.point(Fraction(0)))
        fset = fset.subtract(FracSet.point(Fraction(1)))
        for p in (self.s, self.t):
            if on_segment(p, ea, eb):
                fset = fset.subtract(FracSet.point(param_of(ea, eb, p)))
        for seg in self._sp_segments():
            ov = _collinear_overlap_params(ea, eb, seg[0], seg[1])
            if ov is not None:
                fset = fset.subtract(FracSet.interval(ov[0], ov[1], True, True))
        return fset

    def _sp_segments(self) -> list[tuple[Point, Point]]:
        return [(self.sp[i], self.sp[i + 1]) for i in range(len(self.sp) - 1)]

    # ---------------- link feasibility ----------------

    def stage_of_endpoint(self, is_target: bool) -> int:
        return len(self.stages) - 1 if is_target else 0

    def link_ok(self, x: Point, x_site: TurnSite | None, y: Point,
                y_site: TurnSite | None, *, x_is_source: bool = False,
                y_is_target: bool = False) -> bool:
        """Exact feasibility of one path link from x to y.

        Sites carry stage/edge context for turning points; source/target ends
        are exempt from reflection-direction rules.
        """
        if x == y:
            return False
        sx = 0 if x_is_source else x_site.stage
        sy = len(self.stages) - 1 if y_is_target else y_site.stage
        if sx > sy:
            return False
        if not self.polygon.segment_inside(x, y):
            return False
        for wa, wb in self.walls:
            inter = segment_intersection(x, y, wa, wb)
            if inter.kind == "none":
                continue
            if inter.kind in ("proper", "overlap"):
                return False
            pt = inter.point
            if x_is_source and pt == x:
                continue
            if y_is_target and pt == y:
                continue
            return False
        for g in self.gates:
            inter = segment_intersection(x, y, g.near, g.far)
            required = sx <= g.index < sy
            if required:
                if inter.kind != "proper":
                    return False
            else:
                if inter.kind in ("proper", "overlap"):
                    return False
        if x_site is not None and not x_is_source:
            ea, eb = self.polygon.edge(x_site.edge)
            if orient_sign(ea, eb, y) == 0:
                return False
        if y_site is not None and not y_is_target:
            ea, eb = self.polygon.edge(y_site.edge)
            if orient_sign(ea, eb, x) == 0:
                return False
        if (not x_is_source and not y_is_target and sx == sy
                and y_site.chain_pos <= x_site.chain_pos):
            return False
        return True

    def site(self, stage_idx: int, edge: int, param: Fraction) -> TurnSite:
        stage = self.stages[stage_idx]
        ea, eb = self.polygon.edge(edge)
        pt = point_between(ea, eb, param)
        pos = stage.chain.position_of_edge_t(edge, param)
        return TurnSite(pt, stage_idx, edge, param, pos)


def param_of(a: Point, b: Point, p: Point) -> Fraction:
    from .geom import param_on_segment

    return param_on_segment(p, a, b)


def _collinear_overlap_params(a: Point, b: Point, c: Point, d: Point):
    """Param range of edge a-b overlapped by segment c-d, or None."""
    if orient_sign(a, b, c) != 0 or orient_sign(a, b, d) != 0:
        return None
    u = param_of(a, b, c)
    v = param_of(a, b, d)
    if u > v:
        u, v = v, u
    lo = max(u, Fraction(0))
    hi = min(v, Fraction(1))
    if lo > hi:
        return None
    return lo, hi
