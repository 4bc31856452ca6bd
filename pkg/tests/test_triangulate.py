"""Ear-clipping triangulation: structure, coverage, dual connectivity."""

from fractions import Fraction

import pytest

from reflectpath.geom import Point
from reflectpath.polygon import Polygon
from reflectpath.triangulate import Triangulation
from tests.conftest import random_instances

P = lambda x, y: Point.from_xy(Fraction(x), Fraction(y))


def _check_triangulation(poly):
    tri = Triangulation(poly)
    crossed = len(tri.triangles)
    # a simple polygon with v effective (non-straight) vertices has v-2 ears
    assert crossed >= 1
    area = sum(Polygon([poly.vertices[i] for i in t]).signed_area2()
               for t in tri.triangles)
    assert area == poly.signed_area2()
    # dual graph must connect all triangles (it is a tree on a sleeve query)
    seen = {0}
    stack = [0]
    while stack:
        cur = stack.pop()
        for nb, _edge in tri.neighbors(cur):
            if nb not in seen:
                seen.add(nb)
                stack.append(nb)
    assert seen == set(range(len(tri.triangles)))
    return tri


def test_square_triangulation(square):
    tri = _check_triangulation(square.polygon)
    assert len(tri.triangles) == 2


def test_fixture_triangulations(ell, zigzag, blocked):
    for inst in (ell, zigzag, blocked):
        _check_triangulation(inst.polygon)


def test_collinear_vertices_are_handled():
    # middle vertex of the bottom edge is straight; clipping must not stall
    poly = Polygon([P(0, 0), P(2, 0), P(4, 0), P(4, 3), P(0, 3)])
    tri = _check_triangulation(poly)
    assert len(tri.triangles) >= 2


def test_locate_inside_and_dual_path(zigzag):
    tri = Triangulation(zigzag.polygon)
    ts = tri.locate(zigzag.source)
    tt = tri.locate(zigzag.target)
    sleeve = tri.dual_path(ts, tt)
    assert sleeve[0] == ts and sleeve[-1] == tt
    # a dual path in a tree never repeats a triangle
    assert len(set(sleeve)) == len(sleeve)


@pytest.mark.parametrize("idx", range(8))
def test_random_triangulations(idx):
    inst = random_instances(8, start_seed=500)[idx]
    _check_triangulation(inst.polygon)
