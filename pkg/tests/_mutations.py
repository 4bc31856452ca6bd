"""Mutation operators for the path validator kill suite.

Each operator deforms a known-valid path so that exactly one named rule is
the reason for rejection; co-tripped secondary rules are allowed, but the
expected code must be among the failures.  Hosts: the solved ell, zigzag and
spiral-12 paths (deterministic engine outputs, re-validated before mutation).
"""

from fractions import Fraction as F

from reflectpath.geom import Point


def _pt(x, y):
    return Point.from_xy(F(x), F(y))


def _drop_target(e, z, s):
    return "ell", e[:-1]


def _snap_turn_to_vertex(e, z, s):
    return "ell", [e[0], _pt(4, 0), e[2]]


def _lift_turn_inward(e, z, s):
    return "ell", [e[0], _pt(F(15, 4), F(3, 5)), e[2]]


def _detour_outside(e, z, s):
    return "ell", [e[0], _pt(5, 2), e[2]]


def _arrive_along_edge(e, z, s):
    return "ell", [e[0], e[1], _pt(4, 2), e[2]]


def _depart_along_edge(e, z, s):
    return "ell", [e[0], _pt(4, 2), e[1], e[2]]


def _retrace_link(e, z, s):
    return "zigzag", [z[0], z[1], _pt(F(1, 2), F(29, 16)), z[2], z[3]]


def _swap_spiral_turns(e, z, s):
    return "spiral", [s[0], s[1], s[3], s[2], s[4], s[5]]


def _cross_first_chord(e, z, s):
    return "zigzag", [z[0], z[1], _pt(2, 0), z[2], z[3]]


def _skip_gate_crossing(e, z, s):
    return "zigzag", [z[0], z[1], z[3]]


def _ride_the_gate(e, z, s):
    return "zigzag", [z[0], z[1], _pt(F(9, 2), F(13, 4)),
                      _pt(F(11, 2), F(15, 4)), z[2], z[3]]


def _flatten_turn(e, z, s):
    return "ell", [e[0], e[1], _pt(F(15, 4), F(41, 20)), e[2]]


def _reverse_mid_stretch(e, z, s):
    return "spiral", s[:5] + [_pt(8, 4)] + [s[5]]


def _weave_gate_thrice(e, z, s):
    return "zigzag", [z[0], z[1], z[2], _pt(3, 3), z[2], z[3]]


def _overshoot_chain(e, z, s):
    return "zigzag", [z[0], _pt(0, F(1, 2)), z[2], z[3]]


def _walk_chain_backward(e, z, s):
    return "spiral", [s[0], s[2], s[1], s[3], s[4], s[5]]


# (operator name, expected rejection code, path builder)
MUTATIONS = [
    ("drop-target", "endpoints", _drop_target),
    ("snap-turn-to-vertex", "turn-at-vertex", _snap_turn_to_vertex),
    ("lift-turn-inward", "turn-off-boundary", _lift_turn_inward),
    ("detour-outside", "link-outside", _detour_outside),
    ("arrive-along-edge", "collinear-arrival", _arrive_along_edge),
    ("depart-along-edge", "collinear-departure", _depart_along_edge),
    ("retrace-link", "backtrack", _retrace_link),
    ("swap-spiral-turns", "self-intersection", _swap_spiral_turns),
    ("cross-first-chord", "sp-contact", _cross_first_chord),
    ("skip-gate-crossing", "gate-count", _skip_gate_crossing),
    ("ride-the-gate", "gate-overlap", _ride_the_gate),
    ("flatten-turn", "straight-turn", _flatten_turn),
    ("reverse-mid-stretch", "turn-direction", _reverse_mid_stretch),
    ("weave-gate-thrice", "gate-order", _weave_gate_thrice),
    ("overshoot-chain", "chain-side", _overshoot_chain),
    ("walk-chain-backward", "chain-order", _walk_chain_backward),
]
