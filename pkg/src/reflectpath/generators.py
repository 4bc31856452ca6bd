"""Instance generators: spiral corridors, random simple polygons, serpentines.

All generators are deterministic for fixed parameters and return validated
instances with exact rational coordinates.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import InputError
from .geom import Point, orient_sign, segment_intersection
from .instances import Instance
from .polygon import INSIDE, Polygon


def _pt(x, y) -> Point:
    return Point.from_xy(Fraction(x), Fraction(y))


# --- rectangular spiral ------------------------------------------------------

_DIRS = ((1, 0), (0, 1), (-1, 0), (0, -1))  # E N W S, turning left


def gen_spiral(n: int) -> Instance:
    """Width-1 rectangular spiral corridor with n vertices.

    One boundary chain carries only convex corners, the other only reflex
    corners; the query endpoints sit just inside the two corridor caps.
    """
    if n < 6 or n % 2 != 0:
        raise InputError("spiral needs an even vertex count of at least 6")
    chain = n // 2          # vertices per wall
    segs = chain - 1        # wall segments
    pitch = 3
    base = pitch * ((segs + 1) // 2) + 6

    outer = [(0, 0)]
    x, y = 0, 0
    normals = []
    for i in range(segs):
        dx, dy = _DIRS[i % 4]
        length = base - pitch * (i // 2)
        x, y = x + dx * length, y + dy * length
        outer.append((x, y))
        normals.append((-dy, dx))  # left normal: corridor side

    inner = []
    for j in range(chain):
        if j == 0:
            nx, ny = normals[0]
        elif j == segs:
            nx, ny = normals[-1]
        else:
            nx = normals[j - 1][0] + normals[j][0]
            ny = normals[j - 1][1] + normals[j][1]
        inner.append((outer[j][0] + nx, outer[j][1] + ny))

    verts = [_pt(*p) for p in outer] + [_pt(*p) for p in reversed(inner)]
    poly = Polygon(verts)
    rep = poly.validate()
    if not rep.ok:
        raise InputError(f"spiral construction failed validation: {rep.issues}")

    dx0, dy0 = _DIRS[0]
    sx = Fraction(outer[0][0] + inner[0][0], 2) + Fraction(dx0, 2)
    sy = Fraction(outer[0][1] + inner[0][1], 2) + Fraction(dy0, 2)
    dxl, dyl = _DIRS[(segs - 1) % 4]
    tx = Fraction(outer[-1][0] + inner[-1][0], 2) - Fraction(dxl, 2)
    ty = Fraction(outer[-1][1] + inner[-1][1], 2) - Fraction(dyl, 2)
    return Instance(poly, _pt(sx, sy), _pt(tx, ty), name=f"spiral-n{n}")


# --- serpentine corridor with a chosen eave count ----------------------------


def gen_corridor(eaves: int) -> Instance:
    """Comb-shaped switchback corridor whose geodesic has exactly ``eaves``
    eaves.

    Horizontal lanes of height 1 are separated by wall teeth attached to
    alternating side walls, so the geodesic folds back at each lane end;
    each straightaway between opposite folds contributes one eave.
    """
    if eaves < 0:
        raise InputError("eave count must be nonnegative")
    folds = eaves + 1
    width = 6
    top_y = 2 * folds + 1

    boundary: list[tuple[int, int]] = [(0, 0), (width, 0)]
    for i in range(2, folds + 1, 2):      # teeth attached to the right wall
        boundary += [(width, 2 * i - 1), (1, 2 * i - 1), (1, 2 * i), (width, 2 * i)]
    boundary += [(width, top_y), (0, top_y)]
    for i in range(folds - (folds % 2 == 0), 0, -2):  # teeth on the left wall
        boundary += [(0, 2 * i), (width - 1, 2 * i), (width - 1, 2 * i - 1), (0, 2 * i - 1)]

    verts = [_pt(*p) for p in boundary]
    poly = Polygon(verts)
    rep = poly.validate()
    if not rep.ok:
        raise InputError(f"corridor construction failed validation: {rep.issues}")
    s = _pt(Fraction(1, 2), Fraction(1, 2))
    tx = Fraction(1, 2) if folds % 2 == 1 else width - Fraction(1, 2)
    t = _pt(tx, 2 * folds + Fraction(1, 2))
    return Instance(poly, s, t, name=f"corridor-e{eaves}")


# --- random simple polygons ---------------------------------------------------


def _proper_cross(a: Point, b: Point, c: Point, d: Point) -> bool:
    return segment_intersection(a, b, c, d).kind == "proper"


def _untangle(pts: list[Point], budget: int) -> list[Point] | None:
    """2-opt: reverse a subtour whenever two edges cross properly."""
    order = list(pts)
    m = len(order)
    for _ in range(budget):
        crossed = False
        for i in range(m):
            a, b = order[i], order[(i + 1) % m]
            for j in range(i + 2, m):
                if i == 0 and j == m - 1:
                    continue
                c, d = order[j], order[(j + 1) % m]
                if _proper_cross(a, b, c, d):
                    lo, hi = i + 1, j
                    while lo < hi:
                        order[lo], order[hi] = order[hi], order[lo]
                        lo += 1
                        hi -= 1
                    crossed = True
                    break
            if crossed:
                break
        if not crossed:
            return order
    return None


def gen_random_simple(n: int, seed: int, attempts: int = 60) -> Instance:
    """Random simple polygon with n vertices plus interior query points.

    Random grid points untangled by 2-opt; resamples with a derived seed
    when untangling stalls or validation fails.  Deterministic per seed.
    """
    if n < 4:
        raise InputError("need at least 4 vertices")
    span = 3 * n
    for trial in range(attempts):
        rng = random.Random(1_000_003 * seed + 1_009 * n + trial)
        seen = set()
        pts = []
        while len(pts) < n:
            p = (rng.randint(0, span), rng.randint(0, span))
            if p not in seen:
                seen.add(p)
                pts.append(p)
        order = _untangle([_pt(*p) for p in pts], budget=4 * n * n)
        if order is None:
            continue
        poly = Polygon(order)
        if poly.signed_area2() < 0:
            poly = Polygon(list(reversed(order)))
        if not poly.validate().ok:
            continue
        halves = [Fraction(2 * k + 1, 2) for k in range(span)]
        interior = []
        for _ in range(400):
            q = _pt(rng.choice(halves), rng.choice(halves))
            if poly.contains(q) == INSIDE and q not in interior:
                interior.append(q)
                if len(interior) == 12:
                    break
        if len(interior) < 2:
            continue
        # prefer endpoint pairs that cannot see each other; plain visible
        # pairs make the reflection question trivial
        pair = (interior[0], interior[1])
        for i in range(len(interior)):
            for j in range(i + 1, len(interior)):
                if not poly.segment_inside(interior[i], interior[j]):
                    pair = (interior[i], interior[j])
                    break
            else:
                continue
            break
        return Instance(poly, pair[0], pair[1], name=f"random-n{n}-seed{seed}")
    raise InputError(f"random generation exhausted {attempts} attempts")
