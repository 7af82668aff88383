import itertools
import random
from fractions import Fraction

import pytest

from clutterlab import combinat
from clutterlab.combinat import Clutter, RawClutter, SimpleGraph
from clutterlab.errors import UsageError
from clutterlab.families import complete, complete_bipartite, cycle, path

from conftest import all_labeled_graphs, brute_min_covers

F = Fraction


def test_clutter_invariants_enforced():
    with pytest.raises(UsageError):
        Clutter(3, [(0, 1), (0, 1, 2)])  # not an antichain
    with pytest.raises(UsageError):
        Clutter(3, [(0,), (1, 2)])  # singleton edge
    with pytest.raises(UsageError):
        Clutter(4, [(0, 1)])  # isolated vertices
    raw = RawClutter(3, [(0,), (1, 2)])
    assert raw.edges == ((0,), (1, 2))


def test_blocker_triangle_self_blocking(triangle):
    assert combinat.blocker(triangle).edges == ((0, 1), (0, 2), (1, 2))


def test_blocker_single_edge_gives_raw_singletons():
    b = combinat.blocker(RawClutter(3, [(0, 1, 2)]))
    assert b.edges == ((0,), (1,), (2,))
    assert isinstance(b, RawClutter) and not isinstance(b, Clutter)


def test_blocker_square(square):
    assert combinat.blocker(square).edges == ((0, 2), (1, 3))


def test_minimal_covers_match_bruteforce():
    rng = random.Random(3)
    done = 0
    while done < 30:
        n = rng.randint(2, 6)
        cand = [
            tuple(sorted(rng.sample(range(n), rng.randint(2, min(3, n)))))
            for _ in range(rng.randint(1, 5))
        ]
        keep = [e for e in cand if not any(set(f) < set(e) for f in cand)]
        if {v for e in keep for v in e} != set(range(n)):
            continue
        c = Clutter(n, keep)
        assert combinat.minimal_covers(c) == brute_min_covers(c)
        assert combinat.blocker(combinat.blocker(c)).edges == c.edges
        done += 1


def test_covering_and_matching_numbers(triangle, square):
    assert combinat.covering_number(square) == 2
    assert combinat.max_disjoint_edges(square) == 2
    assert combinat.has_konig(square)
    c5 = Clutter(5, cycle(5).edges)
    assert combinat.covering_number(c5) == 3
    assert combinat.max_disjoint_edges(c5) == 2
    assert not combinat.has_konig(c5)
    assert combinat.covering_number(triangle) == 2
    assert combinat.max_disjoint_edges(triangle) == 1
    assert not combinat.has_konig(triangle)


def test_uniform_unmixed(square):
    assert combinat.is_uniform(square) == 2
    assert combinat.is_unmixed(square)
    assert combinat.is_uniform(Clutter(4, [(0, 1), (1, 2, 3)])) is None
    c5 = Clutter(5, cycle(5).edges)
    assert combinat.is_uniform(c5) == 2
    assert combinat.is_unmixed(c5)  # all covers have size 3


def test_suspension(triangle):
    s = combinat.suspension(triangle)
    assert s.edges == ((0, 1, 3), (0, 2, 3), (1, 2, 3))
    assert s.q == triangle.q
    assert combinat.suspension(RawClutter(2, [(0, 1)])).edges == ((0, 1, 2),)


def test_graph_constructions():
    assert combinat.graph_cone(complete(2)).edges == complete(3).edges
    assert combinat.complement(cycle(5)).edges == SimpleGraph(
        5, [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    ).edges
    lg = combinat.line_graph(complete_bipartite(2, 4))
    assert lg.n == 8
    cl = combinat.clique_clutter(lg)
    assert cl.q == 6
    expected = {
        (1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (1, 0, 0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0, 0, 1),
    }
    assert set(cl.characteristic_vectors()) == expected


def test_clique_clutters():
    assert combinat.clique_clutter(complete(3)).edges == ((0, 1, 2),)
    assert combinat.clique_clutter(cycle(4)).edges == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_cone_suspension_compatibility():
    rng = random.Random(5)
    for n in range(2, 7):
        for _ in range(8):
            edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
            g = SimpleGraph(n, edges)
            left = combinat.clique_clutter(combinat.graph_cone(g))
            right = combinat.suspension(combinat.clique_clutter(g))
            assert left.edges == right.edges


def test_meyniel_basics():
    ok, wit = combinat.is_meyniel(cycle(5))
    assert not ok and wit[1] == 0 and len(wit[0]) == 5
    assert combinat.is_meyniel(complete(4))[0]
    assert combinat.is_meyniel(path(4))[0]
    with_chord = SimpleGraph(7, list(cycle(7).edges) + [(0, 2)])
    ok, wit = combinat.is_meyniel(with_chord)
    assert not ok and wit[1] <= 1


def test_hoang_witnesses():
    assert combinat.hoang_witness(complete(3), 0) == (0,)
    assert combinat.hoang_witness(cycle(5), 0) is None
    assert combinat.hoang_witness(cycle(4), 0) == (0, 2)


def test_meyniel_differential_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            direct, _ = combinat.is_meyniel(g)
            assert direct == combinat.is_meyniel_via_hoang(g)


def test_perfection():
    ok, wit = combinat.is_perfect_small(cycle(5))
    assert not ok and wit[0] == "hole"
    assert combinat.is_perfect_small(complete_bipartite(3, 3))[0]
    ok, wit = combinat.is_perfect_small(combinat.complement(cycle(7)))
    assert not ok and wit[0] == "antihole"


def test_meyniel_implies_perfect_small():
    for n in range(1, 6):
        for g in all_labeled_graphs(n):
            if combinat.is_meyniel(g)[0]:
                assert combinat.is_perfect_small(g)[0]


def test_odd_hole_against_subset_oracle():
    # induced odd cycle detection vs degree-profile check on vertex subsets
    def brute(g):
        for r in range(5, g.n + 1, 2):
            for vs in itertools.combinations(range(g.n), r):
                h = combinat.induced_subgraph(g, vs)
                deg = [0] * h.n
                for a, b in h.edges:
                    deg[a] += 1
                    deg[b] += 1
                if (
                    len(h.edges) == h.n
                    and all(d == 2 for d in deg)
                    and combinat.is_connected(h)
                ):
                    return True
        return False

    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(1, 7)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = SimpleGraph(n, edges)
        assert (combinat.odd_hole(g) is not None) == brute(g)


def test_beta_witness_values():
    assert combinat.beta_witness(complete(3)) == (F(1, 3),) * 3
    assert combinat.beta_witness(complete(2)) == (F(1, 2), F(1, 2))
    assert combinat.beta_witness(path(3)) == (F(2, 3), F(1, 3), F(2, 3))


def test_beta_witness_postcondition_random():
    rng = random.Random(21)
    checked = 0
    while checked < 15:
        n = rng.randint(2, 7)
        edges = [p for p in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        g = SimpleGraph(n, edges)
        if not combinat.is_meyniel(g)[0]:
            continue
        beta = combinat.beta_witness(g)
        assert all(x > 0 for x in beta)
        for cl in combinat.maximal_cliques(g):
            assert sum(beta[i] for i in cl) == 1
        checked += 1


def test_beta_witness_rejects_non_meyniel():
    with pytest.raises(UsageError, match="not Meyniel"):
        combinat.beta_witness(cycle(5))


def test_gamma_witness():
    assert combinat.gamma_witness([(0, 1), (2, 3)]) == (F(1, 2),) * 4
    assert combinat.gamma_witness([(0, 1, 2)]) == (F(1),) * 3
    assert combinat.gamma_witness([(0, 1), (2, 3), (4, 5)]) == (F(1, 3),) * 6
    with pytest.raises(UsageError):
        combinat.gamma_witness([(0, 1), (1, 2)])


def test_disjoint_cover_partition(triangle):
    k22 = Clutter(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert combinat.disjoint_cover_partition(k22) == [(0, 1), (2, 3)]
    assert combinat.disjoint_cover_partition(triangle) is None


def test_deletion_contraction(triangle):
    assert combinat.contraction(triangle, 0).edges == ((0,), (1,))
    assert combinat.deletion(triangle, 0).edges == ((0, 1),)
