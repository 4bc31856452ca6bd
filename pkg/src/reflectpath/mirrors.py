"""Layered mirror propagation until the target is visible or nothing is left.

Layer 1 holds the admissible intervals visible from the source; layer i+1
holds the admissible points reachable with one more turn from layer i, minus
everything already reached (first-reach partition).  The build stops when the
target sees a mirror of the newest layer, or when a layer comes up empty —
the latter certifies that no constrained path exists.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InternalInconsistency, LayerCapExceeded
from .geom import Point, orient_sign, point_between
from .intervals import FracSet
from .region import Frame, TurnSite
from .visibility import (collinear_boundary_cuts, pairwise_cut_params,
                         refine_params, segment_line_cut)


class Mirror:
    """One maximal admissible interval reached first at a given layer."""

    __slots__ = ("id", "layer", "stage", "edge", "fset", "piece", "side",
                 "parents", "span")

    def __init__(self, id: int, layer: int, stage: int, edge: int,
                 fset: FracSet, piece: str, side: str, parents: list[int]):
        self.id = id
        self.layer = layer
        self.stage = stage
        self.edge = edge
        self.fset = fset
        self.piece = piece
        self.side = side  # plain | primed | double_primed
        self.parents = parents
        self.span: tuple[Fraction, Fraction] | None = None  # reach extent (chain pos)

    def __repr__(self):
        return (f"Mirror(id={self.id}, layer={self.layer}, stage={self.stage}, "
                f"edge={self.edge}, fset={self.fset!r})")


class TargetVisible:
    __slots__ = ("k", "witnesses")

    def __init__(self, k: int, witnesses: list[tuple[int, FracSet]]):
        self.k = k
        self.witnesses = witnesses  # (mirror id, feasible param set toward t)

    status = "target_visible"


class Exhausted:
    __slots__ = ("layers_built",)

    def __init__(self, layers_built: int):
        self.layers_built = layers_built

    status = "exhausted"


class Direct:
    __slots__ = ()
    k = 0
    status = "direct"


class MirrorSystem:
    """Finished layer structure plus bookkeeping for audits and rendering."""

    def __init__(self, frame: Frame):
        self.frame = frame
        self.layers: list[list[Mirror]] = []
        self.covered: dict[tuple[int, int], FracSet] = {}
        self.termination = None
        self.trace: list[dict] = []
        self._by_id: dict[int, Mirror] = {}

    def mirror(self, mid: int) -> Mirror:
        return self._by_id[mid]

    def all_mirrors(self):
        for layer in self.layers:
            yield from layer

    # ---- audits used by property tests ----

    def first_reach_disjoint(self) -> bool:
        seen: dict[tuple[int, int], FracSet] = {}
        for m in self.all_mirrors():
            key = (m.stage, m.edge)
            prior = seen.get(key, FracSet.empty())
            if not prior.intersect(m.fset).is_empty():
                return False
            seen[key] = prior.union(m.fset)
        return True

    def layer_positions(self, layer_idx: int) -> list[tuple[Fraction, Fraction]]:
        """(min, max) global chain-position extents of each mirror of a layer."""
        out = []
        for m in self.layers[layer_idx]:
            lo, hi = _mirror_pos_range(self.frame, m)
            out.append((_global_pos(self.frame, m.stage, lo),
                        _global_pos(self.frame, m.stage, hi)))
        return out


def _mirror_pos_range(frame: Frame, m: Mirror) -> tuple[Fraction, Fraction]:
    chain = frame.stages[m.stage].chain
    b = m.fset.bounds()
    if b is None:
        raise InternalInconsistency("empty mirror")
    p0 = chain.position_of_edge_t(m.edge, b[0])
    p1 = chain.position_of_edge_t(m.edge, b[1])
    return (p0, p1) if p0 <= p1 else (p1, p0)


def _global_pos(frame: Frame, stage: int, pos: Fraction) -> Fraction:
    """Chain position offset so stages concatenate monotonically."""
    base = Fraction(0)
    for j in range(stage):
        base += frame.stages[j].chain.length + 1
    return base + pos


class _Builder:
    def __init__(self, frame: Frame):
        self.frame = frame
        self.system = MirrorSystem(frame)
        self.next_id = 1
        # admissible minus covered, maintained incrementally
        self.open_sets: dict[tuple[int, int], FracSet] = {}
        for j, per_edge in enumerate(frame.admissible):
            for edge, fset in per_edge.items():
                self.open_sets[(j, edge)] = fset

    # ---------- pointwise feasibility ----------

    def feasible_on_mirror(self, m: Mirror, target: Point,
                           target_site: TurnSite | None,
                           target_is_t: bool) -> FracSet:
        """Params on mirror m whose point can form a link to ``target``."""
        if m.fset.is_empty():
            return FracSet.empty()
        frame = self.frame
        ea, eb = frame.polygon.edge(m.edge)
        if target_site is not None and target_site.edge == m.edge:
            return FracSet.empty()  # along-edge departure is never allowed
        cuts: list[Fraction] = []
        for a in frame.anchors:
            if a == target:
                continue
            c = segment_line_cut(ea, eb, target, a)
            if c is not None:
                cuts.append(c)
        if target_site is not None:
            ha, hb = frame.polygon.edge(target_site.edge)
            c = segment_line_cut(ea, eb, ha, hb)
            if c is not None:
                cuts.append(c)
        if orient_sign(ea, eb, target) == 0:
            cuts.extend(collinear_boundary_cuts(frame.polygon, ea, eb))

        def pred(u: Fraction) -> bool:
            site = frame.site(m.stage, m.edge, u)
            return frame.link_ok(site.point, site, target, target_site,
                                 y_is_target=target_is_t)

        return refine_params(m.fset, cuts, pred)

    def reach_set(self, m: Mirror, stage_j: int, edge: int,
                  window: FracSet) -> FracSet:
        """Subset of ``window`` on (stage_j, edge) reachable from mirror m."""
        frame = self.frame
        if stage_j < m.stage or window.is_empty():
            return FracSet.empty()
        if stage_j == m.stage and edge == m.edge:
            return FracSet.empty()
        ea, eb = frame.polygon.edge(edge)
        extra = _interval_endpoints_as_points(frame, m)
        cuts = pairwise_cut_params(ea, eb, frame.anchors + extra)
        if stage_j == m.stage:
            # prune targets at or behind the whole mirror
            lo_pos, _hi_pos = _mirror_pos_range(frame, m)
            chain = frame.stages[stage_j].chain

            def fwd(u: Fraction) -> bool:
                return chain.position_of_edge_t(edge, u) > lo_pos
        else:
            def fwd(u: Fraction) -> bool:
                return True

        def pred(u: Fraction) -> bool:
            if not fwd(u):
                return False
            site = frame.site(stage_j, edge, u)
            return not self.feasible_on_mirror(m, site.point, site, False).is_empty()

        return refine_params(window, cuts, pred)

    # ---------- layer construction ----------

    def initial_layer(self) -> list[Mirror]:
        frame = self.frame
        reached: dict[tuple[int, int], FracSet] = {}
        parents: dict[tuple[int, int], list[int]] = {}
        for (j, edge), window in sorted(self.open_sets.items()):
            if window.is_empty():
                continue
            ea, eb = frame.polygon.edge(edge)
            cuts = pairwise_cut_params(ea, eb, frame.anchors)

            def pred(u: Fraction, j=j, edge=edge) -> bool:
                site = frame.site(j, edge, u)
                return frame.link_ok(frame.s, None, site.point, site,
                                     x_is_source=True)

            got = refine_params(window, cuts, pred)
            if not got.is_empty():
                reached[(j, edge)] = got
                parents[(j, edge)] = []
        return self._emit(reached, parents, layer=1)

    def next_layer(self, prev: list[Mirror], layer: int) -> list[Mirror]:
        frame = self.frame
        reached: dict[tuple[int, int], FracSet] = {}
        parents: dict[tuple[int, int], list[int]] = {}
        for m in prev:
            spawn_lo = None
            spawn_hi = None
            for (j, edge), window in sorted(self.open_sets.items()):
                got = self.reach_set(m, j, edge, window)
                if got.is_empty():
                    continue
                key = (j, edge)
                reached[key] = reached.get(key, FracSet.empty()).union(got)
                parents.setdefault(key, [])
                if m.id not in parents[key]:
                    parents[key].append(m.id)
                b = got.bounds()
                chain = frame.stages[j].chain
                plo = _global_pos(frame, j, min(chain.position_of_edge_t(edge, b[0]),
                                                chain.position_of_edge_t(edge, b[1])))
                phi = _global_pos(frame, j, max(chain.position_of_edge_t(edge, b[0]),
                                                chain.position_of_edge_t(edge, b[1])))
                spawn_lo = plo if spawn_lo is None else min(spawn_lo, plo)
                spawn_hi = phi if spawn_hi is None else max(spawn_hi, phi)
            if spawn_lo is not None:
                m.span = (spawn_lo, spawn_hi)
        return self._emit(reached, parents, layer=layer)

    def _emit(self, reached, parents, layer: int) -> list[Mirror]:
        frame = self.frame
        mirrors: list[Mirror] = []
        order = []
        for (j, edge), fset in reached.items():
            chain = frame.stages[j].chain
            for iv in fset.intervals():
                mid_param = iv.pick()
                pos = chain.position_of_edge_t(edge, mid_param)
                order.append((_global_pos(frame, j, pos), j, edge, iv))
        order.sort(key=lambda rec: rec[0])
        for gpos, j, edge, iv in order:
            piece = _piece_kind(frame, j, edge, iv.pick())
            par = parents.get((j, edge), [])
            side = "plain"
            if par:
                pstages = {self.system.mirror(pid).stage for pid in par}
                if any(ps < j for ps in pstages):
                    side = "double_primed"
                elif piece == "exit" and frame.stages[j].exit_gate is not None:
                    side = "primed"
            m = Mirror(self.next_id, layer, j, edge,
                       FracSet.from_intervals([iv]), piece, side, par)
            self.next_id += 1
            mirrors.append(m)
            self.system._by_id[m.id] = m
        # first-reach subtraction
        for m in mirrors:
            key = (m.stage, m.edge)
            self.open_sets[key] = self.open_sets[key].subtract(m.fset)
            cov = self.system.covered.get(key, FracSet.empty())
            self.system.covered[key] = cov.union(m.fset)
        return mirrors


def _interval_endpoints_as_points(frame: Frame, m: Mirror) -> list[Point]:
    ea, eb = frame.polygon.edge(m.edge)
    pts = []
    for iv in m.fset.intervals():
        pts.append(point_between(ea, eb, iv.lo))
        if not iv.degenerate:
            pts.append(point_between(ea, eb, iv.hi))
    return pts


def _piece_kind(frame: Frame, stage_j: int, edge: int, param: Fraction) -> str:
    stage = frame.stages[stage_j]
    pos = stage.chain.position_of_edge_t(edge, param)
    for piece in stage.pieces:
        if piece.lo <= pos <= piece.hi:
            return piece.kind
    return "core"


def run(frame: Frame, layer_cap: int | None = None) -> MirrorSystem:
    """Build mirror layers to termination."""
    if frame.direct:
        system = MirrorSystem(frame)
        system.termination = Direct()
        return system
    if layer_cap is None:
        layer_cap = frame.polygon.n * (frame.polygon.n + 1)
    builder = _Builder(frame)
    system = builder.system
    layer = builder.initial_layer()
    system.layers.append(layer)
    system.trace.append({"layer": 1, "mirrors": len(layer)})
    while True:
        k = len(system.layers)
        witnesses = []
        for m in system.layers[-1]:
            w = builder.feasible_on_mirror(m, frame.t, None, True)
            if not w.is_empty():
                witnesses.append((m.id, w))
        if witnesses:
            system.termination = TargetVisible(k, witnesses)
            return system
        if not system.layers[-1]:
            system.termination = Exhausted(k)
            return system
        if k + 1 > layer_cap:
            raise LayerCapExceeded(f"more than {layer_cap} mirror layers")
        new = builder.next_layer(system.layers[-1], k + 1)
        system.trace.append({"layer": k + 1, "mirrors": len(new)})
        if not new:
            system.termination = Exhausted(k)
            return system
        system.layers.append(new)
