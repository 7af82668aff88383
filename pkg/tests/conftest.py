"""Shared brute-force oracles and instance builders for the test suite.

The oracles are deliberately independent of the library's own algorithms:
naive Fraction elimination, subset scans, exhaustive combination searches.
Expected values in the tests were computed with these and then frozen.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from clutterlab import kernel
from clutterlab.combinat import SimpleGraph
from clutterlab.polyhedron import HRep


def rank_oracle(matrix) -> int:
    """Plain Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            f = m[i][c] / m[r][c]
            for j in range(c, ncols):
                m[i][j] -= f * m[r][j]
        r += 1
        if r == nrows:
            break
    return r


def brute_vertices(h: HRep):
    """All vertices of a pointed H-polyhedron by scanning constraint subsets."""
    n = h.n
    cons = list(h.ineqs) + list(h.eqs)
    verts = set()
    for sub in itertools.combinations(range(len(cons)), n):
        rows = [cons[i][0] for i in sub]
        rhs = [cons[i][1] for i in sub]
        if kernel.rank(rows) != n:
            continue
        x = kernel.solve(rows, rhs)
        if x is None:
            continue
        if all(kernel.dot(a, x) <= b for a, b in h.ineqs) and all(
            kernel.dot(a, x) == b for a, b in h.eqs
        ):
            verts.add(tuple(x))
    return sorted(verts)


def brute_lattice_points(h: HRep, box):
    """Integer points of an H-polytope inside the given coordinate box."""
    lo, hi = box
    out = []
    for p in itertools.product(range(lo, hi + 1), repeat=h.n):
        if all(kernel.dot(a, p) <= b for a, b in h.ineqs) and all(
            kernel.dot(a, p) == b for a, b in h.eqs
        ):
            out.append(p)
    return out


def brute_min_covers(c):
    """Minimal transversals by scanning all vertex subsets."""
    edges = [set(e) for e in c.edges]
    covers = []
    for r in range(c.n + 1):
        for s in itertools.combinations(range(c.n), r):
            ss = set(s)
            if all(e & ss for e in edges):
                covers.append(ss)
    keep = [tuple(sorted(s)) for s in covers if not any(t < s for t in covers)]
    return tuple(sorted(set(keep)))


def brute_in_semigroup(a, gens, cap=8) -> bool:
    """Exhaustive nonnegative combination search with a coefficient cap."""
    for counts in itertools.product(range(cap + 1), repeat=len(gens)):
        v = tuple(sum(ci * g[i] for ci, g in zip(counts, gens)) for i in range(len(a)))
        if v == tuple(a):
            return True
    return False


def brute_staircase_min(n, normals, rhs, box):
    """Minimal points of an up-closed region via a full box scan."""
    pts = [
        p
        for p in itertools.product(range(box + 1), repeat=n)
        if all(sum(w[i] * p[i] for i in range(n)) >= r for w, r in zip(normals, rhs))
    ]
    pset = set(pts)
    return tuple(
        sorted(
            p
            for p in pts
            if not any(
                tuple(x - int(i == j) for i, x in enumerate(p)) in pset
                for j in range(n)
                if p[j] > 0
            )
        )
    )


def all_labeled_graphs(n):
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield SimpleGraph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@pytest.fixture
def triangle():
    from clutterlab.combinat import Clutter

    return Clutter(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def square():
    from clutterlab.combinat import Clutter

    return Clutter(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
