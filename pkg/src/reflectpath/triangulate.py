"""Ear-clipping triangulation with a tree-structured dual for sleeve walks.

Straight (collinear) vertices are dropped before clipping; they are never
geodesic corners, and removing them keeps every produced triangle
non-degenerate so the dual stays a tree of area-positive cells.
"""

from __future__ import annotations

from .errors import InternalInconsistency
from .geom import Point, orient_sign
from .polygon import Polygon


def _closed_triangle_contains(a: Point, b: Point, c: Point, p: Point) -> bool:
    return orient_sign(a, b, p) >= 0 and orient_sign(b, c, p) >= 0 and orient_sign(c, a, p) >= 0


def triangulate(polygon: Polygon) -> list[tuple[int, int, int]]:
    """Triangles as CCW vertex-index triples partitioning the polygon."""
    verts = polygon.vertices
    idx = list(range(polygon.n))

    changed = True
    while changed:
        changed = False
        for k in range(len(idx)):
            a = verts[idx[k - 1]]
            b = verts[idx[k]]
            c = verts[idx[(k + 1) % len(idx)]]
            if orient_sign(a, b, c) == 0:
                del idx[k]
                changed = True
                break
    if len(idx) < 3:
        raise InternalInconsistency("polygon degenerates after dropping straight vertices")

    triangles: list[tuple[int, int, int]] = []
    guard = 0
    while len(idx) > 3:
        guard += 1
        if guard > 4 * polygon.n * polygon.n:
            raise InternalInconsistency("ear clipping failed to converge")
        clipped = False
        m = len(idx)
        for k in range(m):
            i0, i1, i2 = idx[k - 1], idx[k], idx[(k + 1) % m]
            a, b, c = verts[i0], verts[i1], verts[i2]
            if orient_sign(a, b, c) <= 0:
                continue
            blocked = False
            for j in idx:
                if j in (i0, i1, i2):
                    continue
                if _closed_triangle_contains(a, b, c, verts[j]):
                    blocked = True
                    break
            if blocked:
                continue
            triangles.append((i0, i1, i2))
            del idx[k]
            clipped = True
            break
        if not clipped:
            raise InternalInconsistency("no ear found; polygon may be non-simple")
    triangles.append((idx[0], idx[1], idx[2]))
    return triangles


class Triangulation:
    """Triangles plus dual adjacency and point location for one polygon."""

    def __init__(self, polygon: Polygon):
        self.polygon = polygon
        self.triangles = triangulate(polygon)
        self._adj: dict[int, list[tuple[int, tuple[int, int]]]] = {i: [] for i in range(len(self.triangles))}
        edge_owner: dict[tuple[int, int], int] = {}
        for ti, (a, b, c) in enumerate(self.triangles):
            for u, v in ((a, b), (b, c), (c, a)):
                key = (u, v) if u < v else (v, u)
                if key in edge_owner:
                    tj = edge_owner[key]
                    self._adj[ti].append((tj, key))
                    self._adj[tj].append((ti, key))
                else:
                    edge_owner[key] = ti

    def neighbors(self, ti: int):
        return self._adj[ti]

    def locate(self, p: Point) -> int:
        verts = self.polygon.vertices
        for ti, (a, b, c) in enumerate(self.triangles):
            if _closed_triangle_contains(verts[a], verts[b], verts[c], p):
                return ti
        raise InternalInconsistency(f"point {p!r} not located in any triangle")

    def dual_path(self, t_from: int, t_to: int) -> list[int]:
        if t_from == t_to:
            return [t_from]
        prev = {t_from: -1}
        queue = [t_from]
        while queue:
            cur = queue.pop()
            for nxt, _ in self._adj[cur]:
                if nxt not in prev:
                    prev[nxt] = cur
                    if nxt == t_to:
                        path = [t_to]
                        while path[-1] != t_from:
                            path.append(prev[path[-1]])
                        path.reverse()
                        return path
                    queue.append(nxt)
        raise InternalInconsistency("dual graph is disconnected")
