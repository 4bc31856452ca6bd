"""Path extraction, validation, and the validator mutation kill suite."""

from fractions import Fraction

import pytest

from _mutations import MUTATIONS
from conftest import random_instances
from reflectpath.generators import gen_spiral
from reflectpath.geom import Point
from reflectpath.paths import solve_instance, validate_path

F = Fraction


def _xy(p):
    return (p.x, p.y)


@pytest.fixture(scope="module")
def solved(square, ell, zigzag, blocked):
    return {
        "square": solve_instance(square),
        "ell": solve_instance(ell),
        "zigzag": solve_instance(zigzag),
        "blocked": solve_instance(blocked),
        "spiral": solve_instance(gen_spiral(12)),
    }


def test_square_direct_path(solved):
    r = solved["square"]
    assert r.status == "path" and r.k == 0
    assert [_xy(p) for p in r.path.points] == [(F(1), F(1)), (F(3), F(3))]


def test_ell_path_frozen(solved):
    r = solved["ell"]
    assert r.status == "path" and r.k == 1
    assert [_xy(p) for p in r.path.points] == [
        (F(1, 2), F(1, 2)), (F(4), F(3, 5)), (F(7, 2), F(7, 2))]
    assert r.path.turns == 1
    rep = validate_path(r.path.points, r.frame)
    assert rep.ok and rep.crossings == []


def test_zigzag_path_frozen(solved):
    r = solved["zigzag"]
    assert r.status == "path" and r.k == 2
    assert [_xy(p) for p in r.path.points] == [
        (F(1), F(1)), (F(0), F(21, 8)), (F(10), F(9, 2)), (F(9), F(6))]
    rep = validate_path(r.path.points, r.frame)
    assert rep.ok
    # the single eave is crossed exactly once, on the middle link
    assert [(g, li) for g, li, _ in rep.crossings] == [(0, 1)]


def test_blocked_has_no_path(solved):
    r = solved["blocked"]
    assert r.status == "no-cdrp"
    assert r.k is None and r.path is None


def test_spiral_path_valid(solved):
    r = solved["spiral"]
    assert r.status == "path" and r.k == 4
    assert validate_path(r.path.points, r.frame).ok


def test_random_solves_validate():
    for inst in random_instances(30, start_seed=4100):
        r = solve_instance(inst)
        if r.status != "path":
            continue
        rep = validate_path(r.path.points, r.frame)
        assert rep.ok, (inst.name, rep.failures)
        assert r.k == len(r.path.points) - 2


def test_turn_sites_match_points(solved):
    for name in ("ell", "zigzag", "spiral"):
        r = solved[name]
        assert len(r.path.sites) == r.k
        for p, site in zip(r.path.points[1:-1], r.path.sites):
            assert site.point == p


@pytest.mark.parametrize("name,code,build",
                         MUTATIONS, ids=[m[0] for m in MUTATIONS])
def test_mutation_is_killed(solved, name, code, build):
    host, points = build(solved["ell"].path.points,
                         solved["zigzag"].path.points,
                         solved["spiral"].path.points)
    frame = solved[host].frame
    # the undeformed host path passes; the mutation must not
    assert validate_path(solved[host].path.points, frame).ok
    report = validate_path(points, frame)
    assert not report.ok
    assert code in report.codes(), (name, sorted(report.codes()))


def test_every_rejection_code_is_exercised():
    assert len(MUTATIONS) >= 12
    assert len({code for _, code, _ in MUTATIONS}) == len(MUTATIONS)
