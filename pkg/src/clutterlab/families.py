"""Instance generators: named examples, standard families, seeded batches,
and the search for a chordal graph whose clique-clutter edge ideal is not
normal."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from . import combinat, ideals
from .combinat import Clutter, RawClutter, SimpleGraph
from .errors import ResourceExceeded, UsageError

IntVec = tuple[int, ...]


# ---------------------------------------------------------------------------
# Standard graphs
# ---------------------------------------------------------------------------


def cycle(k: int) -> SimpleGraph:
    if k < 3:
        raise UsageError("cycle: need at least 3 vertices")
    return SimpleGraph(k, [(i, (i + 1) % k) for i in range(k)])


def path(k: int) -> SimpleGraph:
    if k < 1:
        raise UsageError("path: need at least 1 vertex")
    return SimpleGraph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k: int) -> SimpleGraph:
    return SimpleGraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_bipartite(n: int, seed: int, p: float = 0.5, connected: bool = True) -> SimpleGraph:
    """Seeded random bipartite graph; retries until connected when asked."""
    rng = random.Random(seed)
    for _ in range(1000):
        a = rng.randint(1, max(1, n - 1))
        edges = [
            (i, a + j) for i in range(a) for j in range(n - a) if rng.random() < p
        ]
        g = SimpleGraph(n, edges)
        if not connected or combinat.is_connected(g):
            return g
    raise ResourceExceeded("random bipartite retries", 1000)


def random_chordal(n: int, seed: int) -> SimpleGraph:
    """Seeded chordal graph built by repeated simplicial vertex additions."""
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        g = SimpleGraph(v, edges)
        cliques = combinat.maximal_cliques(g)
        base = list(rng.choice(cliques)) if cliques and cliques[0] else []
        if base:
            size = rng.randint(1, len(base))
            nbrs = rng.sample(base, size)
            edges.extend((u, v) for u in nbrs)
    return SimpleGraph(n, edges)


def is_chordal(g: SimpleGraph) -> bool:
    return not combinat._induced_cycles(g, 4)


# ---------------------------------------------------------------------------
# Named instances
# ---------------------------------------------------------------------------


def sharpness_clutter(d: int, g: int) -> Clutter:
    """Vertices split into d classes of size g; edges are all transversals.

    The minimal covers are exactly the d classes, so the clutter is
    d-uniform, unmixed, has covering number g, and attains both series
    bounds with equality.
    """
    if d < 1 or g < 2:
        raise UsageError("sharpness_clutter: need d >= 1 and g >= 2")
    if d * g > 12 or g**d > 4096:
        raise ResourceExceeded("sharpness clutter size", 4096)
    classes = [tuple(range(i * g, (i + 1) * g)) for i in range(d)]
    edges = []

    def rec(i: int, acc: tuple[int, ...]):
        if i == d:
            edges.append(acc)
            return
        for v in classes[i]:
            rec(i + 1, acc + (v,))

    rec(0, ())
    c = Clutter(d * g, edges)
    got = combinat.blocker(c)
    if got.edges != tuple(sorted(classes)):
        raise AssertionError("transversal clutter must block to its classes")
    return c


def line_graph_k24() -> tuple[SimpleGraph, RawClutter]:
    """Line graph of the complete bipartite graph on 2 + 4 vertices,
    together with its clique clutter (= the stars of the host graph)."""
    host = complete_bipartite(2, 4)
    g = combinat.line_graph(host)
    c = combinat.clique_clutter(g)
    expected = {
        (1, 1, 1, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 1, 1, 1),
        (1, 0, 0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1, 0, 0),
        (0, 0, 1, 0, 0, 0, 1, 0),
        (0, 0, 0, 1, 0, 0, 0, 1),
    }
    if set(c.characteristic_vectors()) != expected:
        raise AssertionError("unexpected vertex-clique matrix for the line graph")
    return g, c


def triangle_clutter() -> Clutter:
    return Clutter(3, [(0, 1), (1, 2), (0, 2)])


def cycle_clutter(k: int) -> Clutter:
    g = cycle(k)
    return Clutter(k, g.edges)


# ---------------------------------------------------------------------------
# Isomorphism-free enumeration
# ---------------------------------------------------------------------------


def canonical_form(g: SimpleGraph) -> tuple[int, ...]:
    """Lexicographically smallest row encoding over all vertex relabelings.

    Row k encodes adjacency to the already-placed vertices as a k-bit
    number; branch and bound over placements, pruning any prefix that
    already exceeds the best complete encoding.
    """
    n = g.n
    masks = combinat.adjacency_masks(g)
    best: list[int] | None = None

    def rec(placed: list[int], rows: list[int]):
        nonlocal best
        k = len(placed)
        if k == n:
            if best is None or rows < best:
                best = list(rows)
            return
        used = set(placed)
        cands = []
        for v in range(n):
            if v in used:
                continue
            code = 0
            for i, u in enumerate(placed):
                if masks[v] >> u & 1:
                    code |= 1 << i
            cands.append((code, v))
        cands.sort()
        for code, v in cands:
            if best is not None and rows + [code] > best[: k + 1]:
                break  # candidates are sorted, later ones only get bigger
            rec(placed + [v], rows + [code])

    rec([], [])
    assert best is not None
    return (n, *best)


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    """A concrete relabeling achieving the canonical form."""
    form = canonical_form(g)
    rows = form[1:]
    edges = []
    for k, code in enumerate(rows):
        for i in range(k):
            if code >> i & 1:
                edges.append((i, k))
    return SimpleGraph(g.n, edges)


def graphs_upto_iso(n: int) -> tuple[SimpleGraph, ...]:
    """All graphs on exactly n vertices, one per isomorphism class."""
    if n < 1:
        raise UsageError("graphs_upto_iso: need n >= 1")
    level = [SimpleGraph(1, [])]
    for k in range(2, n + 1):
        seen = {}
        for g in level:
            for nbrs in range(1 << (k - 1)):
                edges = list(g.edges) + [
                    (i, k - 1) for i in range(k - 1) if nbrs >> i & 1
                ]
                h = SimpleGraph(k, edges)
                seen.setdefault(canonical_form(h), h)
        level = [seen[f] for f in sorted(seen)]
    return tuple(level)


def _has_perfect_matching(a: int, b: int, adj: list[int]) -> bool:
    """Bitmask matching for a bipartite graph with sides of size a and b."""
    if a != b:
        return False
    match_to = [-1] * b

    def augment(u: int, seen: int) -> bool:
        m = adj[u]
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            if seen >> j & 1:
                continue
            seen |= 1 << j
            if match_to[j] < 0 or augment(match_to[j], seen):
                match_to[j] = u
                return True
        return False

    for u in range(a):
        if not augment(u, 0):
            return False
    return True


def unmixed_bipartite_graphs(n_max: int):
    """All connected bipartite graphs up to isomorphism, n <= n_max vertices,
    whose minimal vertex covers all share one size.

    Both color classes are minimal covers of a connected bipartite graph,
    so only balanced bipartitions can be unmixed; that prunes the scan.
    """
    if n_max > 8:
        raise ResourceExceeded("unmixed bipartite enumeration", 8)
    out: dict[tuple[int, ...], SimpleGraph] = {}
    for n in range(2, n_max + 1):
        if n % 2:
            continue
        a = n // 2
        pairs = [(i, a + j) for i in range(a) for j in range(a)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            if len(edges) < n - 1:
                continue
            adj = [0] * a
            for i, j in edges:
                adj[i] |= 1 << (j - a)
            g = SimpleGraph(n, edges)
            if not combinat.is_connected(g):
                continue
            if not _has_perfect_matching(a, a, adj):
                continue
            if not combinat.is_unmixed(Clutter(n, edges)):
                continue
            out.setdefault(canonical_form(g), g)
    return tuple(out[f] for f in sorted(out))


# ---------------------------------------------------------------------------
# Seeded batches for the conjecture runner
# ---------------------------------------------------------------------------

CONJECTURE_FAMILIES = (
    "bipartite",
    "chordal",
    "meyniel-closure",
    "line-of-bipartite",
    "complements",
)


def conjecture_instance(family: str, index: int, max_n: int, seed: int) -> SimpleGraph:
    """Deterministic perfect-graph instance for a (family, index) slot."""
    rng = random.Random(f"{seed}:{family}:{index}")
    n = rng.randint(3, max(3, max_n))
    sub = rng.randrange(1 << 30)
    if family == "bipartite":
        return random_bipartite(n, sub)
    if family == "chordal":
        return random_chordal(n, sub)
    if family == "meyniel-closure":
        base = random_chordal(max(2, n - rng.randint(1, 2)), sub)
        g = base
        while g.n < n:
            g = combinat.graph_cone(g)
        return g
    if family == "line-of-bipartite":
        host = random_bipartite(min(n, 6), sub)
        g = combinat.line_graph(host)
        if g.n == 0:
            return complete(2)
        return g
    if family == "complements":
        return combinat.complement(random_chordal(n, sub))
    raise UsageError(f"unknown family {family!r}")


# ---------------------------------------------------------------------------
# Search: chordal graph with a non-normal clique-clutter edge ideal
# ---------------------------------------------------------------------------


def sun_hexagon(base: int) -> list[tuple[int, int]]:
    """Hexagon with the three alternating chords (four triangle cliques).

    Its triangles pairwise intersect, so one copy contributes fractional
    matchings of value 3/2 against integer matching 1; two copies push the
    gap past an integer.
    """
    v = lambda i: base + (i % 6)
    edges = [(v(i), v(i + 1)) for i in range(6)]
    edges += [(v(1), v(3)), (v(3), v(5)), (v(1), v(5))]
    return edges


def _gadget_candidates() -> list[SimpleGraph]:
    """Systematic two-gadget gluings, smallest first."""
    out = []
    out.append(SimpleGraph(6, sun_hexagon(0)))
    # two gadgets sharing one chord vertex
    shared = sun_hexagon(0)
    relab = {0: 3, 1: 6, 2: 7, 3: 8, 4: 9, 5: 10}
    shared += [
        (relab[a], relab[b])
        for a, b in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 3), (3, 5), (1, 5)]
    ]
    out.append(SimpleGraph(11, shared))
    # disjoint pair
    out.append(SimpleGraph(12, sun_hexagon(0) + sun_hexagon(6)))
    # chord vertices joined by an edge
    out.append(SimpleGraph(12, sun_hexagon(0) + sun_hexagon(6) + [(3, 9)]))
    # joined through a middle vertex (two bridge edges)
    out.append(SimpleGraph(13, sun_hexagon(0) + sun_hexagon(7) + [(3, 6), (6, 8)]))
    return out


@dataclass(frozen=True)
class NonNormalHit:
    graph: SimpleGraph
    clutter: RawClutter
    power: int
    witness: IntVec


@lru_cache(maxsize=32)
def search_nonnormal_chordal(
    n_max: int = 13, budget: int = 32, power_bound: int = 3, seed: int = 0
) -> NonNormalHit | None:
    """First chordal graph (seeded probes, then gadget gluings) whose
    clique-clutter edge ideal fails normality up to `power_bound`."""
    candidates: list[SimpleGraph] = []
    for n in range(4, 9):
        for k in range(2):
            candidates.append(random_chordal(n, seed + 7 * n + k))
    candidates.extend(_gadget_candidates())
    examined = 0
    for g in candidates:
        if g.n > n_max:
            continue
        if examined >= budget:
            return None
        examined += 1
        if not is_chordal(g):
            raise AssertionError("search candidate must be chordal")
        c = combinat.clique_clutter(g)
        report = ideals.is_normal_upto(c, power_bound)
        if not report.ok:
            return NonNormalHit(
                graph=g,
                clutter=c,
                power=report.normal.failure_power,
                witness=report.normal.witness,
            )
    return None
