"""Frame structure: gates, walls, stages, chains, and admissible pieces."""

from fractions import Fraction

import pytest

from reflectpath.errors import InputError
from reflectpath.geom import Orientation, Point
from reflectpath.region import Frame

P = lambda x, y: Point.from_xy(Fraction(x), Fraction(y))


def test_source_equals_target_rejected(square):
    with pytest.raises(InputError):
        Frame(square.polygon, square.source, square.source)


def test_direct_frame_has_no_stages(square):
    fr = Frame(square.polygon, square.source, square.target)
    assert fr.direct
    assert fr.stages == [] and fr.gates == []


def test_ell_frame_single_stage(ell_frame):
    fr = ell_frame
    assert not fr.direct
    assert [(str(p.x), str(p.y)) for p in fr.sp] == \
        [("1/2", "1/2"), ("3", "1"), ("7/2", "7/2")]
    assert fr.turns == [Orientation.LEFT]
    assert fr.gates == [] and len(fr.walls) == 2
    assert len(fr.stages) == 1
    st = fr.stages[0]
    assert st.chirality == Orientation.LEFT
    assert st.entry_gate is None and st.exit_gate is None
    assert st.chain.length == 6
    assert [(p.kind, p.lo, p.hi) for p in st.pieces] == [("core", 0, 6)]


def test_zigzag_frame_two_stages(zigzag_frame):
    fr = zigzag_frame
    assert [(str(p.x), str(p.y)) for p in fr.sp] == \
        [("1", "1"), ("4", "3"), ("6", "4"), ("9", "6")]
    # the middle geodesic edge is the lone gate
    assert len(fr.gates) == 1
    g = fr.gates[0]
    assert g.sp_edge == 1
    assert g.near == P(4, 3) and g.far == P(6, 4)
    assert len(fr.walls) == 2

    assert len(fr.stages) == 2
    s0, s1 = fr.stages
    assert s0.chirality == Orientation.RIGHT
    assert s1.chirality == Orientation.LEFT

    # stage 0 runs toward the gate, stage 1 away from it
    assert s0.entry_gate is None and s0.exit_gate is g
    assert s1.entry_gate is g and s1.exit_gate is None

    # gate-line extension feet on the boundary
    assert s0.exit_foot.point == P(0, 1)
    assert s1.entry_foot.point == P(10, 6)

    assert [(p.kind, p.lo, p.hi) for p in s0.pieces] == \
        [("core", 0, Fraction(9, 4)), ("exit", Fraction(9, 4), 4)]
    assert [(p.kind, p.lo, p.hi) for p in s1.pieces] == \
        [("entry", 0, Fraction(7, 4)), ("core", Fraction(7, 4), 4)]


def test_stage_chain_positions_increase(zigzag_frame):
    for st in zigzag_frame.stages:
        assert st.chain.length > 0
        for lo_hi in zip(st.pieces, st.pieces[1:]):
            assert lo_hi[0].hi == lo_hi[1].lo


def test_anchors_contain_endpoints(ell_frame, zigzag_frame):
    for fr in (ell_frame, zigzag_frame):
        assert fr.s in fr.anchors and fr.t in fr.anchors
        for rp in fr.reflex_points:
            assert rp in fr.anchors


def test_blocked_frame_shape(blocked):
    fr = Frame(blocked.polygon, blocked.source, blocked.target)
    assert len(fr.sp) == 3          # single turn
    assert fr.gates == []           # and yet no constrained path exists
    assert len(fr.stages) == 1
