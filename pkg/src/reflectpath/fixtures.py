"""Small reference instances used by the test-suite, docs, and benchmarks.

Each factory returns a fresh ``Instance``; expected optima quoted in the
docstrings were frozen from the enumeration oracles.
"""

from __future__ import annotations

from fractions import Fraction

from .geom import Point
from .instances import Instance
from .polygon import Polygon


def _pt(x, y) -> Point:
    return Point.from_xy(Fraction(x), Fraction(y))


def _poly(*coords) -> Polygon:
    return Polygon([_pt(x, y) for x, y in coords])


def square() -> Instance:
    """Unit case: 4x4 square, endpoints mutually visible (optimum 0 turns)."""
    return Instance(
        _poly((0, 0), (4, 0), (4, 4), (0, 4)),
        _pt(1, 1),
        _pt(3, 3),
        name="square",
    )


def ell() -> Instance:
    """L-shaped room with one reflex corner at (3,1); no eave, optimum 1 turn."""
    return Instance(
        _poly((0, 0), (4, 0), (4, 4), (3, 4), (3, 1), (0, 1)),
        _pt(Fraction(1, 2), Fraction(1, 2)),
        _pt(Fraction(7, 2), Fraction(7, 2)),
        name="ell",
    )


def zigzag() -> Instance:
    """Z-corridor whose shortest path carries one eave ((4,3),(6,4)); optimum 2."""
    return Instance(
        _poly((0, 0), (4, 0), (4, 3), (10, 3), (10, 7), (6, 7), (6, 4), (0, 4)),
        _pt(1, 1),
        _pt(9, 6),
        name="zigzag",
    )


def blocked() -> Instance:
    """Instance with no constrained path at all.

    Eight vertices fold into two interleaved pockets; the shortest path makes
    a single right turn at the reflex vertex (18, 17), and with no turn
    reversals both of its chords are uncrossable screens.  The boundary the
    source can see all lies on the four far edges behind the first screen,
    and from there every onward link either crosses a screen, runs along its
    own edge, or walks backward, so the reachable set stops growing with the
    target still unseen.  An unconstrained diffuse-reflection path with one
    turn exists, so non-existence is purely the crossing rule.  Certified by
    exhaustive search over all edge sequences up to k = n turns.
    """
    return Instance(
        _poly(
            (18, 1),
            (24, 24),
            (15, 15),
            (12, 11),
            (13, 22),
            (6, 18),
            (12, 1),
            (18, 17),
        ),
        _pt(Fraction(21, 2), Fraction(19, 2)),
        _pt(Fraction(37, 2), Fraction(25, 2)),
        name="blocked",
    )


FIXTURES = {
    "square": square,
    "ell": ell,
    "zigzag": zigzag,
    "blocked": blocked,
}


def fixture(name: str) -> Instance:
    try:
        return FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choices: {sorted(FIXTURES)}")
