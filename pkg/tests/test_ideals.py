import random

import pytest

from clutterlab import combinat, ideals
from clutterlab.combinat import Clutter
from clutterlab.errors import UsageError
from clutterlab.ideals import MonomialIdeal

from conftest import brute_staircase_min


def random_clutters(seed, count, nmin=3, nmax=6):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(nmin, nmax)
        cand = [
            tuple(sorted(rng.sample(range(n), rng.randint(2, min(3, n)))))
            for _ in range(rng.randint(2, 5))
        ]
        keep = [e for e in cand if not any(set(f) < set(e) for f in cand)]
        if {v for e in keep for v in e} != set(range(n)):
            continue
        out.append(Clutter(n, keep))
    return out


def test_edge_ideal(triangle, square):
    assert ideals.edge_ideal(triangle).gens == ((0, 1, 1), (1, 0, 1), (1, 1, 0))
    assert len(ideals.edge_ideal(square).gens) == 4
    assert ideals.edge_ideal(Clutter(3, [(0, 1, 2)])).gens == ((1, 1, 1),)


def test_power(triangle):
    it = ideals.edge_ideal(triangle)
    p2 = ideals.power(it, 2)
    assert len(p2.gens) == 6 and all(sum(g) == 4 for g in p2.gens)
    assert ideals.power(it, 1).gens == it.gens
    assert ideals.power(MonomialIdeal(3, [(1, 1, 1)]), 3).gens == ((3, 3, 3),)


def test_symbolic_power_triangle(triangle):
    s2 = ideals.symbolic_power(triangle, 2)
    assert s2.gens == ((0, 2, 2), (1, 1, 1), (2, 0, 2), (2, 2, 0))
    assert ideals.symbolic_power(triangle, 1).gens == ideals.edge_ideal(triangle).gens


def test_symbolic_power_square_equals_power(square):
    assert ideals.symbolic_power(square, 2).gens == ideals.power(
        ideals.edge_ideal(square), 2
    ).gens


def test_staircase_against_box_scan():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 4)
        s = rng.randint(1, 4)
        normals = [tuple(rng.randint(0, 2) for _ in range(n)) for _ in range(s)]
        rhs = [rng.randint(0, 5) for _ in range(s)]
        got = ideals._minimal_staircase_points(n, normals, rhs)
        assert got == brute_staircase_min(n, normals, rhs, 10)


def test_closure_power_triangle(triangle):
    it = ideals.edge_ideal(triangle)
    c2 = ideals.closure_power(it, 2)
    assert c2.gens == ideals.power(it, 2).gens  # (1,1,1) stays excluded
    assert ideals.closure_power(it, 1).gens == it.gens
    assert ideals.closure_power(MonomialIdeal(2, [(2, 0)]), 1).gens == ((2, 0),)


def test_membership(triangle):
    s2 = ideals.symbolic_power(triangle, 2)
    p2 = ideals.power(ideals.edge_ideal(triangle), 2)
    assert s2.contains((1, 1, 1))
    assert not p2.contains((1, 1, 1))
    assert ideals.equals(s2, s2)
    with pytest.raises(UsageError):
        ideals.equals(s2, MonomialIdeal(2, [(1, 0)]))


def test_scaffolded_closure_matches_direct():
    for c in random_clutters(9, 12):
        ide = ideals.edge_ideal(c)
        for i in (1, 2, 3):
            direct = ideals.closure_power(ide, i)
            scaffolded = ideals.closure_power(ide, i, _within=ideals.symbolic_power(c, i))
            assert direct.gens == scaffolded.gens


def test_power_chain():
    for c in random_clutters(10, 10):
        ide = ideals.edge_ideal(c)
        for i in (1, 2, 3):
            pw = ideals.power(ide, i)
            cl = ideals.closure_power(ide, i)
            sym = ideals.symbolic_power(c, i)
            assert pw <= cl <= sym
            for big in (pw, cl, sym):
                gens = big.gens
                for a in gens:
                    for b in gens:
                        if a != b:
                            assert not all(x <= y for x, y in zip(a, b))


def test_first_powers_coincide_for_squarefree():
    for c in random_clutters(11, 8):
        ide = ideals.edge_ideal(c)
        assert ideals.symbolic_power(c, 1).gens == ide.gens
        assert ideals.closure_power(ide, 1).gens == ide.gens


def test_ntf_triangle_fails_at_two(triangle):
    rep = ideals.is_ntf_upto(triangle, 3)
    assert not rep.ok
    assert rep.failure_power == 2
    assert rep.witness == (1, 1, 1)


def test_ntf_square_holds(square):
    rep = ideals.is_ntf_upto(square, 3)
    assert rep.ok and rep.holds_up_to == 3
    rep = ideals.is_ntf_upto(combinat.blocker(square), 3)
    assert rep.ok


def test_normality_reports(triangle, square):
    rep = ideals.is_normal_upto(triangle, 3)
    assert rep.ok and rep.normal.holds_up_to == 3
    assert not rep.closure_vs_symbolic.ok
    assert rep.closure_vs_symbolic.failure_power == 2
    rep = ideals.is_normal_upto(square, 3)
    assert rep.ok and rep.closure_vs_symbolic.ok


def test_closure_vs_symbolic_shortcut_matches_full():
    for c in random_clutters(12, 10):
        short = ideals.closure_vs_symbolic_upto(c, 3)
        full = ideals.is_normal_upto(c, 3).closure_vs_symbolic
        assert (short.ok, short.failure_power) == (full.ok, full.failure_power)


def test_four_triangle_configuration_not_normal():
    # four triples covering each of six points twice, no two disjoint
    quad = Clutter(6, [(0, 1, 2), (0, 3, 4), (1, 3, 5), (2, 4, 5)])
    rep = ideals.is_normal_upto(quad, 2)
    assert not rep.ok
    assert rep.normal.failure_power == 2
    assert rep.normal.witness == (1, 1, 1, 1, 1, 1)
