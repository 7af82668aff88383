"""Hilbert bases of rational cones and affine semigroup membership.

The central predicate is `is_hilbert_basis(H)`: do the nonnegative integer
combinations of H reach every lattice point of the cone spanned by H?
For pointed cones this reduces to computing the unique minimal Hilbert basis
of the cone (triangulation plus fundamental-parallelepiped enumeration) and
checking set containment; cones with lineality are split along their
lineality lattice and the pointed quotient is handled as usual.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod

from . import kernel, polyhedron
from .errors import StepCounter, Undecided, UsageError, step_budget

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class ConeWithLattice:
    """Rational cone given by integer generators, queried against Z^n."""

    n: int
    generators: tuple[IntVec, ...]

    @classmethod
    def from_vectors(cls, vectors, n: int | None = None) -> "ConeWithLattice":
        vecs = [tuple(v) for v in vectors]
        if n is None:
            if not vecs:
                raise UsageError("ConeWithLattice: dimension required for empty generator set")
            n = len(vecs[0])
        gens = sorted({kernel.primitive(v) for v in vecs if any(x != 0 for x in v)})
        return cls(n=n, generators=tuple(gens))

    @property
    def hrep_normals(self):
        """(inequality normals, equation normals); <a,x> <= 0 resp. = 0."""
        return _cone_normals(self)

    def contains(self, x) -> bool:
        ineqs, eqs = self.hrep_normals
        return all(kernel.dot(a, x) <= 0 for a in ineqs) and all(
            kernel.dot(c, x) == 0 for c in eqs
        )

    @property
    def is_pointed(self) -> bool:
        ineqs, eqs = self.hrep_normals
        return kernel.rank(ineqs + eqs) == self.n

    @property
    def extreme_rays(self) -> tuple[IntVec, ...]:
        return _extreme_rays(self)

    @property
    def lineality_lattice_basis(self) -> tuple[IntVec, ...]:
        ineqs, eqs = self.hrep_normals
        if not ineqs and not eqs:
            return tuple(tuple(int(i == j) for i in range(self.n)) for j in range(self.n))
        return kernel.integer_kernel_basis(ineqs + eqs)


@dataclass(frozen=True)
class HilbertBasisReport:
    """Outcome of `is_hilbert_basis`: verdict plus evidence.

    `basis` is the generating set of the cone's lattice semigroup that was
    checked (the minimal Hilbert basis when the cone is pointed);
    `witnesses` are lattice points of the cone unreachable from H.
    """

    verdict: bool
    basis: tuple[IntVec, ...]
    witnesses: tuple[IntVec, ...]


@lru_cache(maxsize=4096)
def _cone_normals(cone: ConeWithLattice):
    return polyhedron.cone_generators_to_hrep(cone.generators, cone.n)


@lru_cache(maxsize=4096)
def _extreme_rays(cone: ConeWithLattice) -> tuple[IntVec, ...]:
    ineqs, eqs = _cone_normals(cone)
    lin_dim = cone.n - kernel.rank(ineqs + eqs)
    out = []
    for g in cone.generators:
        tight = [a for a in ineqs if kernel.dot(a, g) == 0]
        if kernel.rank(tuple(tight) + eqs) == cone.n - lin_dim - 1:
            out.append(g)
    return tuple(out)


def _parallelepiped_points(gens: tuple[IntVec, ...], n: int, steps: StepCounter) -> list[IntVec]:
    """Lattice points of the half-open box {sum l_i g_i : 0 <= l_i < 1}.

    The generators must be linearly independent.  Enumeration goes through
    the Smith normal form of the generator matrix: one representative per
    residue class of (Z^n meet span) modulo the generator lattice, folded
    into the half-open box by subtracting integer parts.
    """
    k = len(gens)
    if k == 0:
        return [(0,) * n]
    mat = tuple(tuple(g[i] for g in gens) for i in range(n))  # n x k, columns = gens
    u, d, _ = kernel.smith_normal_form(mat)
    diag = [d[i][i] for i in range(k)]
    if prod(diag) == 1:
        return [(0,) * n]
    uinv = kernel.unimodular_inverse(u)
    cols = [tuple(row) for row in zip(*gens)]  # n rows again (gens as columns)
    out = []
    for combo in product(*[range(di) for di in diag]):
        steps.spend()
        y = tuple(combo) + (0,) * (n - k)
        x = tuple(kernel.dot(uinv[i], y) for i in range(n))
        lam = kernel.solve(cols, x)
        if lam is None:
            raise AssertionError("parallelepiped representative outside span")
        shift = [int(l) if l.denominator == 1 else (l.numerator // l.denominator) for l in lam]
        pt = tuple(
            x[i] - sum(shift[j] * gens[j][i] for j in range(k)) for i in range(n)
        )
        out.append(pt)
    return out


@lru_cache(maxsize=1024)
def _triangulate(rays: tuple[IntVec, ...], n: int) -> tuple[tuple[IntVec, ...], ...]:
    """Pulling triangulation of a pointed cone into simplicial subcones."""
    if not rays:
        return ((),)
    if kernel.rank(rays) == len(rays):
        return (rays,)
    ineqs, _ = polyhedron.cone_generators_to_hrep(rays, n)
    r0 = rays[0]
    simplices = []
    for f in ineqs:
        if kernel.dot(f, r0) == 0:
            continue
        sub = tuple(r for r in rays if kernel.dot(f, r) == 0)
        for s in _triangulate(sub, n):
            simplices.append(s + (r0,))
    return tuple(simplices)


def hilbert_basis(cone: ConeWithLattice, budget: int | None = None) -> tuple[IntVec, ...]:
    """The unique minimal Hilbert basis of a pointed cone, sorted."""
    if not cone.is_pointed:
        raise UsageError(
            "hilbert_basis: cone is not pointed; use is_hilbert_basis, which "
            "handles lineality"
        )
    return _hilbert_basis_cached(cone, step_budget(budget))


@lru_cache(maxsize=4096)
def _hilbert_basis_cached(cone: ConeWithLattice, budget: int) -> tuple[IntVec, ...]:
    steps = StepCounter(budget, "hilbert basis enumeration")
    rays = cone.extreme_rays
    candidates: set[IntVec] = set(rays)
    for simplex in _triangulate(rays, cone.n):
        for pt in _parallelepiped_points(simplex, cone.n, steps):
            if any(x != 0 for x in pt):
                candidates.add(pt)
    ineqs, eqs = cone.hrep_normals

    def in_cone(x) -> bool:
        return all(kernel.dot(a, x) <= 0 for a in ineqs) and all(
            kernel.dot(c, x) == 0 for c in eqs
        )

    cand_sorted = sorted(candidates)
    basis = []
    for x in cand_sorted:
        reducible = False
        for c in cand_sorted:
            if c == x:
                continue
            steps.spend()
            diff = kernel.vsub(x, c)
            if in_cone(diff):
                reducible = True
                break
        if not reducible:
            basis.append(x)
    return tuple(basis)


# ---------------------------------------------------------------------------
# Semigroup membership
# ---------------------------------------------------------------------------


def semigroup_member(a, vectors, budget: int | None = None):
    """Is `a` a nonnegative integer combination of `vectors`?

    Returns (True, coefficients) with the coefficient per input vector, or
    (False, None).  Raises Undecided when the step budget runs out.
    """
    a = tuple(a)
    vecs = [tuple(v) for v in vectors]
    counts = [0] * len(vecs)
    if all(x == 0 for x in a):
        return True, tuple(counts)
    live = [(i, v) for i, v in enumerate(vecs) if any(x != 0 for x in v)]
    if not live:
        return False, None
    n = len(a)
    cone = ConeWithLattice.from_vectors([v for _, v in live], n)
    if not cone.contains(a):
        return False, None
    steps = StepCounter(step_budget(budget), f"semigroup membership of {a}")
    if cone.is_pointed:
        got = _member_pointed(a, [v for _, v in live], cone, steps)
    else:
        got = _member_general(a, [v for _, v in live], steps)
    if got is None:
        return False, None
    for (i, _), c in zip(live, got):
        counts[i] = c
    return True, tuple(counts)


def _grading_functional(vecs, cone: ConeWithLattice) -> IntVec:
    """Integer functional strictly positive on cone minus the origin.

    Fast path: a shared last coordinate 1 (graded sets).  Otherwise the
    negated sum of the facet normals: zero value would mean tight on every
    facet, which in a pointed cone only the origin achieves.
    """
    n = cone.n
    if all(v[-1] == 1 for v in vecs):
        return (0,) * (n - 1) + (1,)
    ineqs, _ = cone.hrep_normals
    phi = tuple(-sum(f[i] for f in ineqs) for i in range(n))
    if not all(kernel.dot(phi, v) > 0 for v in vecs):
        raise AssertionError("no grading functional found for pointed cone")
    return phi


def _member_pointed(a, vecs, cone: ConeWithLattice, steps: StepCounter):
    phi = _grading_functional(vecs, cone)
    order = sorted(range(len(vecs)), key=lambda i: (-kernel.dot(phi, vecs[i]), vecs[i]))
    ordered = [vecs[i] for i in order]
    weights = [kernel.dot(phi, v) for v in ordered]
    ineqs, eqs = cone.hrep_normals
    failed: set[tuple[int, IntVec]] = set()

    def in_cone(x) -> bool:
        return all(kernel.dot(f, x) <= 0 for f in ineqs) and all(
            kernel.dot(c, x) == 0 for c in eqs
        )

    def rec(idx: int, rem: IntVec, rem_w: int):
        if rem_w == 0:
            return [] if all(x == 0 for x in rem) else None
        if idx == len(ordered):
            return None
        key = (idx, rem)
        if key in failed:
            return None
        v, w = ordered[idx], weights[idx]
        if idx == len(ordered) - 1:
            steps.spend()
            if rem_w % w == 0:
                c = rem_w // w
                if all(r == c * x for r, x in zip(rem, v)):
                    return [(idx, c)]
            failed.add(key)
            return None
        for c in range(rem_w // w, -1, -1):
            steps.spend()
            nxt = tuple(r - c * x for r, x in zip(rem, v))
            if c > 0 and not in_cone(nxt):
                continue
            got = rec(idx + 1, nxt, rem_w - c * w)
            if got is not None:
                return [(idx, c)] + got
        failed.add(key)
        return None

    got = rec(0, tuple(a), kernel.dot(phi, a))
    if got is None:
        return None
    counts = [0] * len(vecs)
    for idx, c in got:
        counts[order[idx]] = c
    return counts


def _member_general(a, vecs, steps: StepCounter):
    """Membership for cones with lineality.

    Feasibility of sum(c_i v_i) = a over c in N^q is decided through the
    pointed solution cone K = {(c, t) >= 0 : sum c_i v_i = t a}: solutions
    with t = 1 exist iff the candidate generators of K's lattice semigroup
    contain one with t = 1.
    """
    q = len(vecs)
    n = len(a)
    normals: list[IntVec] = []
    for j in range(q + 1):
        normals.append(tuple(-int(i == j) for i in range(q + 1)))
    for row in range(n):
        eq = tuple(v[row] for v in vecs) + (-a[row],)
        if any(x != 0 for x in eq):
            normals.append(eq)
            normals.append(tuple(-x for x in eq))
    rays, lines = polyhedron.cone_hrep_to_generators(tuple(normals), q + 1)
    if lines:
        raise AssertionError("solution cone must be pointed")
    solution_cone = ConeWithLattice.from_vectors(rays, q + 1) if rays else None
    if solution_cone is None:
        return None
    for r in rays:
        if r[q] == 1:
            return list(r[:q])
    extremes = solution_cone.extreme_rays
    for simplex in _triangulate(extremes, q + 1):
        for pt in _parallelepiped_points(simplex, q + 1, steps):
            if pt[q] == 1:
                return list(pt[:q])
    return None


# ---------------------------------------------------------------------------
# The Hilbert-basis predicate
# ---------------------------------------------------------------------------


def is_hilbert_basis(vectors, budget: int | None = None) -> HilbertBasisReport:
    """Decide whether N*H covers every lattice point of cone(H)."""
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        raise UsageError("is_hilbert_basis: empty vector set")
    n = len(vecs[0])
    nonzero = sorted({v for v in vecs if any(x != 0 for x in v)})
    if not nonzero:
        return HilbertBasisReport(verdict=True, basis=(), witnesses=())
    cone = ConeWithLattice.from_vectors(nonzero, n)
    if cone.is_pointed:
        basis = hilbert_basis(cone, budget)
        hset = set(nonzero)
        witnesses = tuple(t for t in basis if t not in hset)
        return HilbertBasisReport(verdict=not witnesses, basis=basis, witnesses=witnesses)
    return _is_hilbert_basis_lineality(nonzero, cone, budget)


def _is_hilbert_basis_lineality(vecs, cone: ConeWithLattice, budget) -> HilbertBasisReport:
    """Split along the lineality lattice; check the pointed quotient.

    In coordinates where the lineality lattice is Z^m x 0, the cone factors
    as R^m x C' with C' pointed, so its lattice semigroup is generated by
    +-e_1..e_m and any lift of the Hilbert basis of C'.
    """
    n = cone.n
    lin_basis = cone.lineality_lattice_basis
    m = len(lin_basis)
    bmat = tuple(tuple(l[i] for l in lin_basis) for i in range(n))  # n x m
    u, d, _ = kernel.smith_normal_form(bmat)
    if any(d[i][i] != 1 for i in range(m)):
        raise AssertionError("lineality kernel lattice must be saturated")
    uinv = kernel.unimodular_inverse(u)

    def to_new(x):
        return tuple(kernel.dot(u[i], x) for i in range(n))

    def to_old(y):
        return tuple(kernel.dot(uinv[i], y) for i in range(n))

    projected = [to_new(v)[m:] for v in vecs]
    quotient = ConeWithLattice.from_vectors([p for p in projected if any(p)], n - m)
    if quotient.generators and not quotient.is_pointed:
        raise AssertionError("quotient by lineality must be pointed")
    checks: list[IntVec] = []
    for j in range(m):
        e = tuple(int(i == j) for i in range(n))
        checks.append(to_old(e))
        checks.append(to_old(tuple(-x for x in e)))
    for h in hilbert_basis(quotient, budget) if quotient.generators else ():
        checks.append(to_old((0,) * m + h))
    checks = sorted(set(checks))
    witnesses = []
    for t in checks:
        try:
            ok, _ = semigroup_member(t, vecs, budget)
        except Undecided as exc:
            raise Undecided(exc.what, vector=t) from exc
        if not ok:
            witnesses.append(t)
    return HilbertBasisReport(
        verdict=not witnesses, basis=tuple(checks), witnesses=tuple(witnesses)
    )
