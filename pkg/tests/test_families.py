import itertools
import random

import pytest

from clutterlab import combinat, ehrhart, families, ideals, tdi
from clutterlab.combinat import Clutter, SimpleGraph
from clutterlab.errors import UsageError


def test_canonical_form_isomorphism_invariant():
    rng = random.Random(1)
    for _ in range(50):
        n = rng.randint(1, 6)
        pairs = list(itertools.combinations(range(n), 2))
        edges = [p for p in pairs if rng.random() < 0.5]
        g = SimpleGraph(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        h = SimpleGraph(n, [(perm[a], perm[b]) for a, b in edges])
        assert families.canonical_form(g) == families.canonical_form(h)
        assert families.canonical_form(families.canonical_graph(g)) == families.canonical_form(g)


def test_graph_counts_up_to_isomorphism():
    for n, want in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)]:
        assert len(families.graphs_upto_iso(n)) == want


def test_sharpness_family_structure():
    for d, g in [(2, 2), (2, 3), (3, 2)]:
        c = families.sharpness_clutter(d, g)
        assert combinat.is_uniform(c) == d
        assert combinat.is_unmixed(c)
        assert combinat.covering_number(c) == g
        assert c.q == g**d
        parts = combinat.disjoint_cover_partition(c)
        assert parts is not None and len(parts) == d
    assert set(families.sharpness_clutter(2, 2).edges) == {(0, 2), (0, 3), (1, 2), (1, 3)}


def test_sharpness_family_flow_property():
    for d, g in [(2, 2), (2, 3), (3, 2), (2, 4)]:
        c = families.sharpness_clutter(d, g)
        assert tdi.is_mfmc(c).holds
        a = ehrhart.analyze(c)
        assert a.is_ehrhart
        assert a.a_invariant == -g
        assert a.regularity == (d - 1) * (g - 1)


def test_line_graph_k24():
    g, c = families.line_graph_k24()
    assert g.n == 8
    assert c.q == 6
    assert combinat.is_perfect_small(g)[0]


def test_standard_graphs():
    assert families.cycle(5).edges == SimpleGraph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).edges
    assert families.complete_bipartite(2, 4).n == 6
    with pytest.raises(UsageError):
        families.cycle(2)


def test_random_families_deterministic():
    assert families.random_bipartite(6, 42).edges == families.random_bipartite(6, 42).edges
    assert families.random_chordal(7, 11).edges == families.random_chordal(7, 11).edges
    for s in range(6):
        assert families.is_chordal(families.random_chordal(7, s))


def test_unmixed_bipartite_enumeration_small():
    graphs = families.unmixed_bipartite_graphs(6)
    forms = {families.canonical_form(g) for g in graphs}
    assert families.canonical_form(families.cycle(4)) in forms
    assert families.canonical_form(families.path(3)) not in forms
    assert families.canonical_form(families.complete_bipartite(1, 1)) in forms
    for g in graphs:
        assert combinat.is_connected(g)
        assert combinat.is_unmixed(Clutter(g.n, g.edges))
    # unmixedness forces a perfect matching, hence even order
    assert all(g.n % 2 == 0 for g in graphs)


def test_conjecture_instances_deterministic_and_perfect():
    for fam in families.CONJECTURE_FAMILIES:
        a = families.conjecture_instance(fam, 5, 7, 9)
        b = families.conjecture_instance(fam, 5, 7, 9)
        assert (a.n, a.edges) == (b.n, b.edges)
        assert combinat.is_perfect_small(a)[0]


def test_sun_hexagon_gadget():
    g = SimpleGraph(6, families.sun_hexagon(0))
    assert families.is_chordal(g)
    cl = combinat.clique_clutter(g)
    assert cl.q == 4 and combinat.is_uniform(cl) == 3
    # the four triangles pairwise intersect
    assert combinat.max_disjoint_edges(cl) == 1


def test_search_nonnormal_chordal():
    hit = families.search_nonnormal_chordal()
    assert hit is not None
    assert families.is_chordal(hit.graph)
    assert combinat.is_meyniel(hit.graph)[0]
    assert combinat.is_perfect_small(hit.graph)[0]
    ide = ideals.edge_ideal(hit.clutter)
    assert ideals.closure_contains(ide, hit.power, hit.witness)
    assert not ideals.power(ide, hit.power).contains(hit.witness)
