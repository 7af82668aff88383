"""Clutters and graphs: constructions and exhaustive desk-scale predicates.

A `Clutter` carries the strict invariants (antichain, every edge has at
least two vertices, no isolated vertices).  `RawClutter` relaxes the edge
size and coverage requirements; blockers naturally produce singleton edges,
so they come back as `RawClutter` when needed.  Predicates whose meaning
depends on the strict invariants reject raw inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import ResourceExceeded, UsageError

MEYNIEL_CAP = 16
CLIQUE_CAP = 24

IntVec = tuple[int, ...]


def _canon_edges(n: int, edges) -> tuple[IntVec, ...]:
    out = set()
    for e in edges:
        e = tuple(sorted(set(int(v) for v in e)))
        if not e:
            raise UsageError("empty edge")
        if e[0] < 0 or e[-1] >= n:
            raise UsageError(f"edge {e} out of range for n={n}")
        out.add(e)
    return tuple(sorted(out))


@dataclass(frozen=True)
class RawClutter:
    """Antichain of vertex sets; singleton edges and isolated vertices allowed."""

    n: int
    edges: tuple[IntVec, ...]

    def __init__(self, n: int, edges):
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "edges", _canon_edges(n, edges))
        self._validate()

    def _validate(self):
        es = [set(e) for e in self.edges]
        for i, a in enumerate(es):
            for j, b in enumerate(es):
                if i != j and a < b:
                    raise UsageError(f"not an antichain: {sorted(a)} inside {sorted(b)}")

    @property
    def q(self) -> int:
        return len(self.edges)

    def characteristic_vectors(self) -> tuple[IntVec, ...]:
        return tuple(
            tuple(int(i in set(e)) for i in range(self.n)) for e in self.edges
        )

    def matrix_rows(self) -> tuple[IntVec, ...]:
        """Rows indexed by vertices, columns by edges (the incidence matrix)."""
        vecs = self.characteristic_vectors()
        return tuple(tuple(v[i] for v in vecs) for i in range(self.n))


class Clutter(RawClutter):
    """Clutter with the strict invariants used by most predicates."""

    def _validate(self):
        super()._validate()
        covered = set()
        for e in self.edges:
            if len(e) < 2:
                raise UsageError(f"edge {e} has fewer than two vertices")
            covered.update(e)
        if covered != set(range(self.n)):
            missing = sorted(set(range(self.n)) - covered)
            raise UsageError(f"isolated vertices: {missing}")


def as_clutter_or_raw(n: int, edges) -> RawClutter:
    """Strict `Clutter` when the invariants hold, otherwise `RawClutter`."""
    try:
        return Clutter(n, edges)
    except UsageError:
        return RawClutter(n, edges)


def _require_strict(c: RawClutter, what: str) -> None:
    if not isinstance(c, Clutter):
        raise UsageError(f"{what}: requires a strict clutter (edges of size >= 2)")


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without loops or multi-edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges):
        n = int(n)
        out = set()
        for e in edges:
            a, b = sorted(int(v) for v in e)
            if a == b:
                raise UsageError(f"loop at vertex {a}")
            if a < 0 or b >= n:
                raise UsageError(f"edge {(a, b)} out of range for n={n}")
            out.add((a, b))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(out)))

    def has_edge(self, a: int, b: int) -> bool:
        return adjacency_masks(self)[a] >> b & 1 == 1


@lru_cache(maxsize=65536)
def adjacency_masks(g: SimpleGraph) -> tuple[int, ...]:
    masks = [0] * g.n
    for a, b in g.edges:
        masks[a] |= 1 << b
        masks[b] |= 1 << a
    return tuple(masks)


def induced_subgraph(g: SimpleGraph, vertices) -> SimpleGraph:
    vs = sorted(set(vertices))
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[a], pos[b]) for a, b in g.edges if a in pos and b in pos]
    return SimpleGraph(len(vs), edges)


def is_connected(g: SimpleGraph) -> bool:
    if g.n <= 1:
        return True
    masks = adjacency_masks(g)
    seen = 1
    stack = [0]
    while stack:
        v = stack.pop()
        nxt = masks[v] & ~seen
        while nxt:
            w = (nxt & -nxt).bit_length() - 1
            seen |= 1 << w
            stack.append(w)
            nxt &= nxt - 1
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Covers, blockers, matchings
# ---------------------------------------------------------------------------


@lru_cache(maxsize=65536)
def minimal_covers(c: RawClutter) -> tuple[IntVec, ...]:
    """All minimal vertex covers (minimal transversals of the edge set)."""
    edges = [set(e) for e in c.edges]
    if not edges:
        return ((),)
    found: set[IntVec] = set()

    def is_cover(s: set) -> bool:
        return all(e & s for e in edges)

    def rec(chosen: set, banned: set, idx: int):
        uncovered = next((e for e in edges if not (e & chosen)), None)
        if uncovered is None:
            # prune to a minimal cover by dropping redundant vertices
            cur = set(chosen)
            for v in sorted(chosen, reverse=True):
                if is_cover(cur - {v}):
                    cur.discard(v)
            found.add(tuple(sorted(cur)))
            return
        for v in sorted(uncovered):
            if v in banned:
                continue
            rec(chosen | {v}, set(banned), idx + 1)
            banned.add(v)

    rec(set(), set(), 0)
    minimal = []
    for s in sorted(found):
        ss = set(s)
        if not any(set(t) < ss for t in found):
            minimal.append(s)
    return tuple(minimal)


@dataclass(frozen=True)
class CoverSet:
    """The complete list of minimal vertex covers of a clutter."""

    n: int
    covers: tuple[IntVec, ...]

    @classmethod
    def of(cls, c: RawClutter) -> "CoverSet":
        return cls(n=c.n, covers=minimal_covers(c))

    def vectors(self) -> tuple[IntVec, ...]:
        return tuple(
            tuple(int(i in set(s)) for i in range(self.n)) for s in self.covers
        )


def blocker(c: RawClutter) -> RawClutter:
    """The clutter of all minimal vertex covers, on the same vertex set."""
    return as_clutter_or_raw(c.n, minimal_covers(c))


def covering_number(c: RawClutter) -> int:
    covers = minimal_covers(c)
    return min(len(s) for s in covers)


def max_disjoint_edges(c: RawClutter) -> int:
    """Maximum number of pairwise disjoint edges, exhaustive with pruning."""
    edges = [set(e) for e in c.edges]
    best = 0

    def rec(idx: int, used: set, count: int):
        nonlocal best
        if count > best:
            best = count
        if count + len(edges) - idx <= best:
            return
        for j in range(idx, len(edges)):
            if not (edges[j] & used):
                rec(j + 1, used | edges[j], count + 1)

    rec(0, set(), 0)
    return best


def has_konig(c: RawClutter) -> bool:
    return covering_number(c) == max_disjoint_edges(c)


def is_uniform(c: RawClutter) -> int | None:
    sizes = {len(e) for e in c.edges}
    if len(sizes) == 1:
        return sizes.pop()
    return None


def is_unmixed(c: RawClutter) -> bool:
    return len({len(s) for s in minimal_covers(c)}) == 1


def suspension(c: RawClutter) -> RawClutter:
    """Add a fresh vertex to every edge."""
    new = c.n
    return as_clutter_or_raw(c.n + 1, [tuple(e) + (new,) for e in c.edges])


def deletion(c: RawClutter, v: int) -> RawClutter:
    """Drop all edges through v; v leaves the vertex set."""
    edges = [e for e in c.edges if v not in e]
    remap = lambda w: w if w < v else w - 1
    return as_clutter_or_raw(c.n - 1, [tuple(remap(w) for w in e) for e in edges])


def contraction(c: RawClutter, v: int) -> RawClutter:
    """Remove v from every edge and re-minimalize; v leaves the vertex set."""
    remap = lambda w: w if w < v else w - 1
    shrunk = [tuple(remap(w) for w in e if w != v) for e in c.edges]
    shrunk = [e for e in shrunk if e]
    keep = []
    for e in shrunk:
        se = set(e)
        if not any(set(f) < se for f in shrunk):
            keep.append(e)
    return as_clutter_or_raw(c.n - 1, keep)


# ---------------------------------------------------------------------------
# Graph constructions
# ---------------------------------------------------------------------------


def graph_cone(g: SimpleGraph) -> SimpleGraph:
    """New vertex adjacent to everything."""
    extra = [(v, g.n) for v in range(g.n)]
    return SimpleGraph(g.n + 1, list(g.edges) + extra)


def complement(g: SimpleGraph) -> SimpleGraph:
    edges = [
        (a, b)
        for a in range(g.n)
        for b in range(a + 1, g.n)
        if not g.has_edge(a, b)
    ]
    return SimpleGraph(g.n, edges)


def line_graph(g: SimpleGraph) -> SimpleGraph:
    """Vertices are the edges of g, adjacent when they share an endpoint."""
    es = list(g.edges)
    edges = [
        (i, j)
        for i in range(len(es))
        for j in range(i + 1, len(es))
        if set(es[i]) & set(es[j])
    ]
    return SimpleGraph(len(es), edges)


@lru_cache(maxsize=65536)
def maximal_cliques(g: SimpleGraph) -> tuple[IntVec, ...]:
    """Bron-Kerbosch with pivoting, bitmask sets, canonical output order."""
    if g.n > CLIQUE_CAP:
        raise ResourceExceeded("clique enumeration vertex count", CLIQUE_CAP)
    masks = adjacency_masks(g)
    out = []

    def expand(r: int, p: int, x: int):
        if p == 0 and x == 0:
            out.append(r)
            return
        pool = p | x
        pivot = max(
            range(g.n), key=lambda v: bin(masks[v] & p).count("1") if pool >> v & 1 else -1
        )
        cand = p & ~masks[pivot]
        while cand:
            v = (cand & -cand).bit_length() - 1
            bit = 1 << v
            expand(r | bit, p & masks[v], x & masks[v])
            p &= ~bit
            x |= bit
            cand &= cand - 1

    expand(0, (1 << g.n) - 1, 0)
    cliques = [tuple(v for v in range(g.n) if m >> v & 1) for m in out]
    return tuple(sorted(cliques))


def clique_clutter(g: SimpleGraph) -> RawClutter:
    """Clutter of the maximal cliques (raw when isolated vertices exist)."""
    return as_clutter_or_raw(g.n, [c for c in maximal_cliques(g) if c])


def maximal_stable_sets(g: SimpleGraph) -> tuple[IntVec, ...]:
    return maximal_cliques(complement(g))


# ---------------------------------------------------------------------------
# Cycles, Meyniel, perfection
# ---------------------------------------------------------------------------


def _simple_cycles(g: SimpleGraph, min_len: int):
    """All simple cycles of length >= min_len, one canonical traversal each.

    Canonical form: smallest vertex first, second vertex smaller than the
    last (fixes rotation and reflection).
    """
    masks = adjacency_masks(g)
    cycles = []

    def neighbors(v: int):
        m = masks[v]
        while m:
            w = (m & -m).bit_length() - 1
            yield w
            m &= m - 1

    def rec(start: int, path: list[int], inpath: int):
        last = path[-1]
        for w in neighbors(last):
            if w == start and len(path) >= 3:
                if len(path) >= min_len and path[1] < path[-1]:
                    cycles.append(tuple(path))
            elif w > start and not (inpath >> w & 1):
                path.append(w)
                rec(start, path, inpath | (1 << w))
                path.pop()

    for s in range(g.n):
        rec(s, [s], 1 << s)
    return cycles


def _chords(g: SimpleGraph, cycle: tuple[int, ...]) -> list[tuple[int, int]]:
    k = len(cycle)
    consecutive = {frozenset((cycle[i], cycle[(i + 1) % k])) for i in range(k)}
    out = []
    for i in range(k):
        for j in range(i + 1, k):
            pair = frozenset((cycle[i], cycle[j]))
            if pair not in consecutive and g.has_edge(cycle[i], cycle[j]):
                out.append((min(pair), max(pair)))
    return out


def is_meyniel(g: SimpleGraph):
    """Every odd cycle of length >= 5 must have at least two chords.

    Returns (True, None) or (False, (cycle, chord_count)).
    """
    if g.n > MEYNIEL_CAP:
        raise ResourceExceeded("odd cycle enumeration vertex count", MEYNIEL_CAP)
    for cycle in sorted(_simple_cycles(g, 5)):
        if len(cycle) % 2 == 0:
            continue
        chords = _chords(g, cycle)
        if len(chords) < 2:
            return False, (cycle, len(chords))
    return True, None


def _induced_cycles(g: SimpleGraph, min_len: int):
    """Chordless cycles of length >= min_len (canonical traversals)."""
    masks = adjacency_masks(g)
    holes = []

    def rec(start: int, path: list[int], inpath: int):
        last = path[-1]
        m = masks[last]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if w == start:
                # interior chordlessness holds by construction; the closing
                # edge is chord-free iff start sees no interior vertex
                if (
                    len(path) >= min_len
                    and path[1] < path[-1]
                    and all(not (masks[start] >> v & 1) for v in path[2:-1])
                ):
                    holes.append(tuple(path))
            elif w > start and not (inpath >> w & 1):
                # an induced path away from the start: w may touch only the
                # current endpoint among path[1:], and possibly the start
                if all(not (masks[w] >> v & 1) for v in path[1:-1]):
                    path.append(w)
                    rec(start, path, inpath | (1 << w))
                    path.pop()

    for s in range(g.n):
        rec(s, [s], 1 << s)
    return holes


def odd_hole(g: SimpleGraph) -> tuple[int, ...] | None:
    best = None
    for cycle in _induced_cycles(g, 5):
        if len(cycle) % 2 == 1 and (best is None or cycle < best):
            best = cycle
    return best


def is_perfect_small(g: SimpleGraph):
    """No induced odd hole in the graph or its complement.

    Returns (True, None) or (False, ("hole" | "antihole", cycle)).
    """
    hole = odd_hole(g)
    if hole is not None:
        return False, ("hole", hole)
    anti = odd_hole(complement(g))
    if anti is not None:
        return False, ("antihole", anti)
    return True, None


# ---------------------------------------------------------------------------
# Stable-set witnesses
# ---------------------------------------------------------------------------


def hoang_witness(g: SimpleGraph, u: int):
    """A stable set containing u that meets every maximal clique, or None."""
    if not 0 <= u < g.n:
        raise UsageError(f"vertex {u} out of range")
    cliques = [set(c) for c in maximal_cliques(g)]
    for s in maximal_stable_sets(g):
        if u in s and all(set(s) & c for c in cliques):
            return s
    return None


def is_meyniel_via_hoang(g: SimpleGraph) -> bool:
    """Differential characterization: witnesses in every induced subgraph."""
    if g.n > 9:
        raise ResourceExceeded("induced subgraph sweep vertex count", 9)
    for r in range(1, g.n + 1):
        for vs in combinations(range(g.n), r):
            h = induced_subgraph(g, vs)
            for u in range(h.n):
                if hoang_witness(h, u) is None:
                    return False
    return True


def beta_witness(g: SimpleGraph) -> tuple[Fraction, ...]:
    """Average of per-vertex stable-set witnesses; hits 1 on every clique."""
    witnesses = []
    for k in range(g.n):
        w = hoang_witness(g, k)
        if w is None:
            raise UsageError(f"input not Meyniel: no stable-set witness for vertex {k}")
        witnesses.append(set(w))
    beta = tuple(
        Fraction(sum(1 for w in witnesses if i in w), g.n) for i in range(g.n)
    )
    for cl in maximal_cliques(g):
        if sum(beta[i] for i in cl) != 1:
            raise AssertionError("witness vector misses a clique")
    if any(x <= 0 for x in beta):
        raise AssertionError("witness vector must be strictly positive")
    return beta


def gamma_witness(parts, clutter: RawClutter | None = None) -> tuple[Fraction, ...]:
    """Constant vector 1/d from a partition into d classes."""
    parts = [tuple(sorted(set(p))) for p in parts]
    d = len(parts)
    if d == 0:
        raise UsageError("gamma_witness: empty partition")
    all_vs = [v for p in parts for v in p]
    n = len(all_vs)
    if len(set(all_vs)) != n or set(all_vs) != set(range(n)):
        raise UsageError("gamma_witness: parts must partition the vertex range")
    gamma = tuple(Fraction(1, d) for _ in range(n))
    if clutter is not None:
        if clutter.n != n:
            raise UsageError("gamma_witness: clutter and partition disagree on n")
        for e in clutter.edges:
            if sum(gamma[i] for i in e) != 1:
                raise AssertionError("partition is not transversal to the clutter")
    return gamma


def disjoint_cover_partition(c: RawClutter):
    """d mutually disjoint minimal covers partitioning the vertices, or None.

    Only sensible for d-uniform clutters; each returned cover then meets
    every edge exactly once.
    """
    d = is_uniform(c)
    if d is None:
        raise UsageError("disjoint_cover_partition: clutter is not uniform")
    covers = [set(s) for s in minimal_covers(c)]
    order = sorted(range(len(covers)), key=lambda i: sorted(covers[i]))
    target = set(range(c.n))

    def rec(chosen: list[int], used: set, start: int):
        if len(chosen) == d:
            return list(chosen) if used == target else None
        for idx in range(start, len(covers)):
            i = order[idx]
            s = covers[i]
            if s & used:
                continue
            got = rec(chosen + [i], used | s, idx + 1)
            if got is not None:
                return got
        return None

    got = rec([], set(), 0)
    if got is None:
        return None
    parts = [tuple(sorted(covers[i])) for i in got]
    for p in parts:
        for e in c.edges:
            if len(set(p) & set(e)) != 1:
                raise AssertionError("partition class must meet each edge once")
    return parts
