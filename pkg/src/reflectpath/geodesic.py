"""Geodesic shortest paths inside a simple polygon (funnel over a sleeve).

All comparisons are exact sign computations; the returned path is the true
Euclidean geodesic waypoint sequence (endpoints plus polygon vertices).
"""

from __future__ import annotations

from .errors import InternalInconsistency
from .geom import Orientation, Point, orient_sign
from .polygon import Polygon
from .triangulate import Triangulation


def _portals(tri: Triangulation, sleeve: list[int], s: Point, t: Point) -> list[tuple[Point, Point]]:
    verts = tri.polygon.vertices
    portals: list[tuple[Point, Point]] = [(s, s)]
    for step in range(len(sleeve) - 1):
        cur, nxt = sleeve[step], sleeve[step + 1]
        shared = None
        for nb, edge in tri.neighbors(cur):
            if nb == nxt:
                shared = edge
                break
        if shared is None:
            raise InternalInconsistency("sleeve steps through non-adjacent triangles")
        a, b = verts[shared[0]], verts[shared[1]]
        corner = next(verts[i] for i in tri.triangles[cur] if i not in shared)
        # label so the walker sees (left, right) across the portal
        if orient_sign(corner, a, b) < 0:
            portals.append((a, b))
        else:
            portals.append((b, a))
    portals.append((t, t))
    return portals


def _funnel(portals: list[tuple[Point, Point]]) -> list[Point]:
    apex = portals[0][0]
    left, right = apex, apex
    apex_i = left_i = right_i = 0
    path = [apex]
    i = 1
    while i < len(portals):
        pl, pr = portals[i]
        if orient_sign(apex, right, pr) >= 0:
            # pop only on a strict crossing of the opposite edge; a grazing
            # contact (apex collinear with the edge) pinches the funnel to a
            # line and must narrow it, not fabricate a turn
            if apex == right or orient_sign(apex, left, pr) <= 0:
                right, right_i = pr, i
            else:
                path.append(left)
                apex, apex_i = left, left_i
                left, right = apex, apex
                left_i = right_i = apex_i
                i = apex_i + 1
                continue
        if orient_sign(apex, left, pl) <= 0:
            if apex == left or orient_sign(apex, right, pl) >= 0:
                left, left_i = pl, i
            else:
                path.append(right)
                apex, apex_i = right, right_i
                left, right = apex, apex
                left_i = right_i = apex_i
                i = apex_i + 1
                continue
        i += 1
    path.append(portals[-1][0])

    out: list[Point] = []
    for p in path:
        if not out or p != out[-1]:
            out.append(p)
    k = 1
    while k + 1 < len(out):
        if orient_sign(out[k - 1], out[k], out[k + 1]) == 0:
            del out[k]
        else:
            k += 1
    return out


class GeodesicSolver:
    """Shortest paths, turn data, and eave detection for one polygon."""

    def __init__(self, polygon: Polygon):
        self.polygon = polygon
        self.tri = Triangulation(polygon)
        self._memo: dict[tuple, list[Point]] = {}

    def shortest_path(self, s: Point, t: Point) -> list[Point]:
        key = (s.key(), t.key())
        hit = self._memo.get(key)
        if hit is not None:
            return list(hit)
        rkey = (t.key(), s.key())
        hit = self._memo.get(rkey)
        if hit is not None:
            path = list(reversed(hit))
            self._memo[key] = path
            return list(path)
        if s == t:
            path = [s]
        else:
            ts, tt = self.tri.locate(s), self.tri.locate(t)
            sleeve = self.tri.dual_path(ts, tt)
            path = _funnel(_portals(self.tri, sleeve, s, t))
        self._memo[key] = path
        return list(path)

    def parent_toward(self, root: Point, z: Point) -> Point:
        """Waypoint immediately before ``z`` on the geodesic from ``root``."""
        path = self.shortest_path(root, z)
        if len(path) < 2:
            raise InternalInconsistency("no parent: root coincides with query point")
        return path[-2]


def turn_directions(path: list[Point]) -> list[Orientation]:
    """Turn sense at each interior waypoint of a geodesic."""
    return [
        Orientation(orient_sign(path[i - 1], path[i], path[i + 1]))
        for i in range(1, len(path) - 1)
    ]


def _vertex_index(polygon: Polygon, p: Point) -> int | None:
    for i, v in enumerate(polygon.vertices):
        if v == p:
            return i
    return None


def _is_polygon_edge(polygon: Polygon, iu: int, iv: int) -> bool:
    n = polygon.n
    return iv == (iu + 1) % n or iu == (iv + 1) % n


def _side_subpolygons(polygon: Polygon, iu: int, iv: int) -> tuple[Polygon, Polygon]:
    verts = polygon.vertices
    n = polygon.n
    side_a = [verts[(iu + k) % n] for k in range(((iv - iu) % n) + 1)]
    side_b = [verts[(iv + k) % n] for k in range(((iu - iv) % n) + 1)]
    return Polygon(side_a), Polygon(side_b)


def detect_eaves(polygon: Polygon, path: list[Point]) -> list[int]:
    """Indices ``i`` of geodesic edges ``path[i] -> path[i+1]`` whose removal
    (cutting the polygon along the diagonal) separates the two endpoints.

    Where both incident turn directions exist, the separation test is
    cross-checked against turn reversal; disagreement is an internal error.
    """
    from .polygon import OUTSIDE

    s, t = path[0], path[-1]
    turns = turn_directions(path)
    eaves: list[int] = []
    for i in range(len(path) - 1):
        u, v = path[i], path[i + 1]
        iu, iv = _vertex_index(polygon, u), _vertex_index(polygon, v)
        if iu is None or iv is None:
            continue
        if _is_polygon_edge(polygon, iu, iv):
            continue
        sub_a, sub_b = _side_subpolygons(polygon, iu, iv)
        s_in_a = sub_a.contains(s) != OUTSIDE
        s_in_b = sub_b.contains(s) != OUTSIDE
        t_in_a = sub_a.contains(t) != OUTSIDE
        t_in_b = sub_b.contains(t) != OUTSIDE
        if (s_in_a or s_in_b) is False or (t_in_a or t_in_b) is False:
            raise InternalInconsistency("endpoint not located on either side of a diagonal")
        separated = (s_in_a and not s_in_b and t_in_b and not t_in_a) or (
            s_in_b and not s_in_a and t_in_a and not t_in_b
        )
        if 1 <= i and i + 1 <= len(turns):
            turn_before = turns[i - 1]
            turn_after = turns[i]
            reversal = (
                turn_before != Orientation.COLLINEAR
                and turn_after != Orientation.COLLINEAR
                and turn_before != turn_after
            )
            if reversal != separated:
                raise InternalInconsistency(
                    f"eave tests disagree on edge {i}: separation={separated}, reversal={reversal}"
                )
        if separated:
            eaves.append(i)
    return eaves
