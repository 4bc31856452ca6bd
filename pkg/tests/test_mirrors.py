"""Mirror-layer construction: frozen tables plus structural audits."""

from fractions import Fraction

from _audits import (audit_far_layer_blindness, audit_layer_succession,
                     audit_membership_agreement)
from conftest import random_instances
from reflectpath.generators import gen_corridor, gen_spiral
from reflectpath.mirrors import Direct, Exhausted, TargetVisible, run
from reflectpath.region import Frame

F = Fraction


def _system(inst):
    return run(Frame(inst.polygon, inst.source, inst.target))


def _table(system):
    rows = []
    for li, layer in enumerate(system.layers):
        for m in layer:
            ivs = tuple((iv.lo, iv.hi, iv.lo_closed, iv.hi_closed)
                        for iv in m.fset.intervals())
            rows.append((li + 1, m.id, m.edge, m.stage, m.side, ivs,
                         tuple(m.parents)))
    return rows


def test_square_direct(square):
    system = _system(square)
    assert isinstance(system.termination, Direct)
    assert system.layers == []


def test_ell_mirror_table(ell):
    system = _system(ell)
    term = system.termination
    assert isinstance(term, TargetVisible) and term.k == 1
    full = ((F(0), F(1), False, False),)
    assert _table(system) == [
        (1, 1, 4, 0, "plain", full, ()),
        (1, 2, 5, 0, "plain", full, ()),
        (1, 3, 0, 0, "plain", full, ()),
        (1, 4, 1, 0, "plain", ((F(0), F(3, 10), False, False),), ()),
    ]
    # the target is seen from the bottom-right run and the right wall's foot
    assert [(mid, str(f)) for mid, f in term.witnesses] == [
        (3, "FracSet((7/10, 1))"),
        (4, "FracSet((0, 3/10))"),
    ]


def test_zigzag_mirror_table(zigzag):
    system = _system(zigzag)
    term = system.termination
    assert isinstance(term, TargetVisible) and term.k == 2
    full = ((F(0), F(1), False, False),)
    assert _table(system) == [
        (1, 1, 1, 0, "plain", full, ()),
        (1, 2, 0, 0, "plain", full, ()),
        (1, 3, 7, 0, "plain", full, ()),
        (1, 4, 6, 0, "plain", ((F(1, 12), F(1), False, False),), ()),
        # the gate splits the second layer: one piece stays before the
        # gate (primed), two land past it (double primed)
        (2, 5, 6, 0, "primed", ((F(0), F(1, 12), False, True),), (3,)),
        (2, 6, 2, 1, "double_primed", full, (3, 4)),
        (2, 7, 3, 1, "double_primed", ((F(0), F(3, 4), False, False),), (3, 4)),
    ]
    assert [(mid, str(f)) for mid, f in term.witnesses] == [
        (6, "FracSet((1/12, 1))"),
        (7, "FracSet((0, 3/4))"),
    ]


def test_blocked_exhausts(blocked):
    system = _system(blocked)
    assert isinstance(system.termination, Exhausted)
    full = ((F(0), F(1), False, False),)
    assert _table(system) == [
        (1, 1, 6, 0, "plain", full, ()),
        (1, 2, 5, 0, "plain", full, ()),
        (1, 3, 4, 0, "plain", full, ()),
        (1, 4, 3, 0, "plain", full, ()),
    ]


def test_spiral_layer_positions_tile_the_chain():
    system = _system(gen_spiral(12))
    assert isinstance(system.termination, TargetVisible)
    assert system.termination.k == 4
    got = [system.layer_positions(i) for i in range(len(system.layers))]
    assert got == [
        [(F(0), F(1)), (F(1), F(2)), (F(2), F(3)), (F(3), F(1243, 405))],
        [(F(1243, 405), F(4)), (F(4), F(17177, 4200))],
        [(F(17177, 4200), F(5)), (F(5), F(212203, 41676))],
        [(F(212203, 41676), F(6)), (F(6), F(1894373, 309420))],
    ]
    # each layer resumes exactly where the previous one stopped
    for prev, nxt in zip(got, got[1:]):
        assert prev[-1][1] == nxt[0][0]


def _sweep_instances():
    insts = [gen_spiral(n) for n in (6, 10, 16, 22)]
    insts += [gen_corridor(eaves=e) for e in (1, 3)]
    insts += random_instances(20, start_seed=1300)
    return insts


def test_first_reach_partition_sweep(square, ell, zigzag, blocked):
    for inst in (square, ell, zigzag, blocked, *_sweep_instances()):
        system = _system(inst)
        assert system.first_reach_disjoint(), inst.name
        for layer in system.layers:
            for m in layer:
                assert not m.fset.is_empty(), inst.name


def test_layer_positions_ordered_within_layer():
    for inst in _sweep_instances():
        system = _system(inst)
        for li in range(len(system.layers)):
            pos = system.layer_positions(li)
            for (a_lo, a_hi), (b_lo, b_hi) in zip(pos, pos[1:]):
                assert a_lo <= a_hi <= b_lo <= b_hi, inst.name


def test_second_layer_follows_first(square, ell, zigzag, blocked):
    for inst in (square, ell, zigzag, blocked, *_sweep_instances()):
        system = _system(inst)
        assert audit_layer_succession(system) == [], inst.name


def test_far_layers_cannot_see_each_other(square, ell, zigzag, blocked):
    deep = [gen_spiral(n) for n in range(6, 26, 2)]
    for inst in (square, ell, zigzag, blocked, *deep,
                 *random_instances(16, start_seed=2100)):
        system = _system(inst)
        assert audit_far_layer_blindness(system) == [], inst.name


def test_membership_tests_agree(square, ell, zigzag, blocked):
    insts = [square, ell, zigzag, blocked, gen_spiral(10), gen_spiral(16),
             gen_corridor(eaves=2), *random_instances(16, start_seed=2700)]
    for inst in insts:
        frame = Frame(inst.polygon, inst.source, inst.target)
        assert audit_membership_agreement(frame) == [], inst.name


def test_mirror_count_stays_quadratic():
    for inst in (*(gen_spiral(n) for n in (12, 20, 28)),
                 *random_instances(12, start_seed=3400)):
        system = _system(inst)
        n = len(inst.polygon.vertices)
        total = sum(len(layer) for layer in system.layers)
        assert total <= 4 * n * n, inst.name
