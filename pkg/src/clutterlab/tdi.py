"""Total dual integrality certificates, idealness and flow-property verdicts.

A system x*A <= w (columns v_i, right-hand side w_i) is certified
face-by-face: at every minimal face of the solution polyhedron the active
columns must generate all lattice points of their cone.  Empty systems are
reported as "vacuous" rather than silently true, and budget exhaustion
surfaces as "undecided", never as a verdict.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import combinat, ideals, kernel, lattice, polyhedron
from .combinat import RawClutter, SimpleGraph
from .errors import Undecided, UsageError

IntVec = tuple[int, ...]


@dataclass(frozen=True)
class LinearSystem:
    """The system x*A <= w with integer columns v_i and integer w."""

    columns: tuple[IntVec, ...]
    w: tuple[int, ...]

    def __init__(self, columns, w):
        columns = tuple(tuple(int(x) for x in v) for v in columns)
        w = tuple(int(x) for x in w)
        if len(columns) != len(w):
            raise UsageError("LinearSystem: need one bound per column")
        if not columns:
            raise UsageError("LinearSystem: empty system")
        n = len(columns[0])
        if any(len(v) != n for v in columns):
            raise UsageError("LinearSystem: ragged columns")
        if any(all(x == 0 for x in v) for v in columns):
            raise UsageError("LinearSystem: zero column")
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return len(self.columns[0])

    @property
    def q(self) -> int:
        return len(self.columns)

    def hrep(self) -> polyhedron.HRep:
        return polyhedron.HRep(self.n, tuple(zip(self.columns, self.w)))


@dataclass(frozen=True)
class FaceCheck:
    point: tuple
    active: tuple[int, ...]
    hilbert_ok: bool
    witnesses: tuple[IntVec, ...]


@dataclass(frozen=True)
class TdiCertificate:
    verdict: bool | str  # True | False | "vacuous" | "undecided"
    faces: tuple[FaceCheck, ...]
    failing: FaceCheck | None
    integral: bool | None
    note: str = ""

    @property
    def holds(self) -> bool:
        return self.verdict is True or self.verdict == "vacuous"


@lru_cache(maxsize=65536)
def _hb_verdict(vectors: tuple[IntVec, ...], budget):
    return lattice.is_hilbert_basis(vectors, budget)


def is_tdi(system: LinearSystem, budget: int | None = None) -> TdiCertificate:
    """Face-by-face certification; checking minimal faces suffices because
    the active set of any face extends some minimal face's active set."""
    h = system.hrep()
    v = polyhedron.dd_convert(h)
    if v.is_empty:
        return TdiCertificate(
            verdict="vacuous", faces=(), failing=None, integral=None,
            note="empty polyhedron: no integral objective has a finite optimum",
        )
    faces = []
    cols = system.columns
    for face in polyhedron.minimal_faces(h, v):
        active = tuple(
            j for j in range(system.q)
            if kernel.dot(cols[j], face.point) == system.w[j]
        )
        try:
            report = _hb_verdict(tuple(cols[j] for j in active), budget)
        except Undecided:
            return TdiCertificate(
                verdict="undecided", faces=tuple(faces), failing=None,
                integral=None, note="budget exhausted during a face check",
            )
        check = FaceCheck(
            point=face.point, active=active,
            hilbert_ok=report.verdict, witnesses=report.witnesses,
        )
        faces.append(check)
        if not report.verdict:
            return TdiCertificate(
                verdict=False, faces=tuple(faces), failing=check,
                integral=polyhedron.is_integral(v, h)[0],
            )
    integral, _ = polyhedron.is_integral(v, h)
    if not integral:
        raise AssertionError("certified system with a non-integral polyhedron")
    return TdiCertificate(verdict=True, faces=tuple(faces), failing=None, integral=True)


def is_ideal_clutter(c: RawClutter):
    """Integrality of the covering polyhedron {x >= 0 : x*A >= 1}."""
    h = covering_hrep(c)
    v = polyhedron.dd_convert(h)
    return polyhedron.is_integral(v, h)


def covering_hrep(c: RawClutter) -> polyhedron.HRep:
    n = c.n
    ineqs = [(tuple(-int(i == j) for i in range(n)), 0) for j in range(n)]
    for vec in c.characteristic_vectors():
        ineqs.append((tuple(-x for x in vec), -1))
    return polyhedron.HRep(n, tuple(ineqs))


def covering_system(c: RawClutter) -> LinearSystem:
    """The covering dual in <=-form: columns -v_i with bound -1, -e_j with 0."""
    cols = [tuple(-x for x in vec) for vec in c.characteristic_vectors()]
    w = [-1] * len(cols)
    for j in range(c.n):
        cols.append(tuple(-int(i == j) for i in range(c.n)))
        w.append(0)
    return LinearSystem(cols, w)


def is_mfmc(c: RawClutter, budget: int | None = None) -> TdiCertificate:
    """Flow property of a clutter: the covering system is TDI."""
    return is_tdi(covering_system(c), budget)


def mfmc_ilp_crosscheck(c: RawClutter, wmax: int = 3, limit: int | None = None):
    """Evidence hook: packing LPs for all bounds w with entries <= wmax.

    For each w the fractional and integral optima of
    max{<1,y> : y >= 0, A y <= w} are compared by exact enumeration.
    Returns (consistent, offending w or None).  Evidence, not proof.
    """
    vecs = c.characteristic_vectors()
    q = len(vecs)
    count = 0
    for w in product(range(wmax + 1), repeat=c.n):
        count += 1
        if limit is not None and count > limit:
            break
        # dual polytope {y >= 0 : A y <= w} lives in R^q
        ineqs = [(tuple(-int(i == j) for i in range(q)), 0) for j in range(q)]
        for row in range(c.n):
            ineqs.append((tuple(v[row] for v in vecs), w[row]))
        h = polyhedron.HRep(q, tuple(ineqs))
        v = polyhedron.dd_convert(h)
        if v.is_empty:
            continue
        lp_opt = max(sum(p) for p in v.vertices)
        ilp_opt = max(
            sum(p) for p in polyhedron.lattice_points(v, 1, h)
        )
        if lp_opt != ilp_opt:
            return False, w
    return True, None


# ---------------------------------------------------------------------------
# Hypothesis-vs-verdict reports for general integer systems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SystemReport:
    integral: bool | str  # bool, or "vacuous" for an empty polyhedron
    lifted_hilbert: bool
    tdi: bool | str
    implication_respected: bool


def lifted_vectors(system: LinearSystem) -> tuple[IntVec, ...]:
    return tuple(v + (wi,) for v, wi in zip(system.columns, system.w))


def sufficiency_check(system: LinearSystem, budget: int | None = None) -> SystemReport:
    """Integral polyhedron + lifted columns a Hilbert basis must force TDI."""
    h = system.hrep()
    v = polyhedron.dd_convert(h)
    if v.is_empty:
        integral: bool | str = "vacuous"
    else:
        integral = polyhedron.is_integral(v, h)[0]
    lifted_ok = lattice.is_hilbert_basis(lifted_vectors(system), budget).verdict
    cert = is_tdi(system, budget)
    hyp = (integral is True or integral == "vacuous") and lifted_ok
    respected = (not hyp) or cert.holds
    return SystemReport(
        integral=integral,
        lifted_hilbert=lifted_ok,
        tdi=cert.verdict,
        implication_respected=respected,
    )


@dataclass(frozen=True)
class EquivalenceReport:
    tdi: bool | str
    integral: bool | str
    lifted_with_negatives_hilbert: bool
    agrees: bool


def nonnegative_equivalence_check(
    columns, w, budget: int | None = None
) -> EquivalenceReport:
    """For A >= 0, w >= 0: the system x >= 0, x*A <= w is TDI exactly when
    the polyhedron is integral and the lifted columns together with the
    negated unit vectors form a Hilbert basis."""
    columns = tuple(tuple(int(x) for x in v) for v in columns)
    w = tuple(int(x) for x in w)
    if any(x < 0 for v in columns for x in v) or any(x < 0 for x in w):
        raise UsageError("nonnegative_equivalence_check: entries must be >= 0")
    n = len(columns[0])
    cols = list(columns) + [tuple(-int(i == j) for i in range(n)) for j in range(n)]
    bounds = list(w) + [0] * n
    system = LinearSystem(cols, bounds)
    cert = is_tdi(system, budget)
    h = system.hrep()
    v = polyhedron.dd_convert(h)
    integral: bool | str = "vacuous" if v.is_empty else polyhedron.is_integral(v, h)[0]
    lifted = [vec + (wi,) for vec, wi in zip(columns, w)]
    lifted += [tuple(-int(i == j) for i in range(n)) + (0,) for j in range(n)]
    hb = lattice.is_hilbert_basis(lifted, budget).verdict
    rhs = (integral is True) and hb
    agrees = cert.holds == rhs if cert.verdict != "undecided" else True
    return EquivalenceReport(
        tdi=cert.verdict,
        integral=integral,
        lifted_with_negatives_hilbert=hb,
        agrees=agrees,
    )


@dataclass(frozen=True)
class RoundingReport:
    rounding: bool
    tdi: bool | str
    integral: bool | str
    iff_respected: bool


def integer_rounding_check(system: LinearSystem, budget: int | None = None) -> RoundingReport:
    """Rounding property: lifted columns plus the last unit vector form a
    Hilbert basis; with an integral polyhedron this is equivalent to TDI."""
    lifted = list(lifted_vectors(system))
    lifted.append((0,) * system.n + (1,))
    rounding = lattice.is_hilbert_basis(lifted, budget).verdict
    cert = is_tdi(system, budget)
    h = system.hrep()
    v = polyhedron.dd_convert(h)
    integral: bool | str = "vacuous" if v.is_empty else polyhedron.is_integral(v, h)[0]
    if cert.verdict == "undecided" or integral == "vacuous":
        respected = True  # no finite optima: the equivalence says nothing
    else:
        respected = cert.holds == (rounding and integral is True)
    return RoundingReport(
        rounding=rounding, tdi=cert.verdict, integral=integral, iff_respected=respected
    )


# ---------------------------------------------------------------------------
# Stability polytopes and the perfection cross-check
# ---------------------------------------------------------------------------


def stab_polytope(g: SimpleGraph) -> polyhedron.HRep:
    """{x >= 0 : sum over each maximal clique <= 1}."""
    n = g.n
    ineqs = [(tuple(-int(i == j) for i in range(n)), 0) for j in range(n)]
    for cl in combinat.maximal_cliques(g):
        ineqs.append((tuple(int(i in set(cl)) for i in range(n)), 1))
    return polyhedron.HRep(n, tuple(ineqs))


def stab_system(g: SimpleGraph) -> LinearSystem:
    """The same system as columns: clique vectors with bound 1, -e_j with 0."""
    n = g.n
    cols = [tuple(int(i in set(cl)) for i in range(n)) for cl in combinat.maximal_cliques(g)]
    w = [1] * len(cols)
    for j in range(n):
        cols.append(tuple(-int(i == j) for i in range(n)))
        w.append(0)
    return LinearSystem(cols, w)


@dataclass(frozen=True)
class PerfectionReport:
    perfect: bool
    stab_integral: bool
    stab_tdi: bool | str
    agree: bool


def perfection_crosscheck(g: SimpleGraph, budget: int | None = None) -> PerfectionReport:
    """Perfection, stability-polytope integrality and TDI must coincide."""
    perfect, _ = combinat.is_perfect_small(g)
    h = stab_polytope(g)
    v = polyhedron.dd_convert(h)
    integral, _ = polyhedron.is_integral(v, h)
    cert = is_tdi(stab_system(g), budget)
    agree = (perfect == integral) and (
        cert.verdict == "undecided" or cert.holds == perfect
    )
    return PerfectionReport(
        perfect=perfect, stab_integral=integral, stab_tdi=cert.verdict, agree=agree
    )


# ---------------------------------------------------------------------------
# Consistency suite used by tests and the batch runner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClutterVerdicts:
    ideal: bool
    mfmc: bool | str
    ntf_upto: ideals.PowerComparisonReport
    closure_vs_symbolic: ideals.PowerComparisonReport
    is_ehrhart: bool

    @property
    def consistent(self) -> bool:
        """The flow property forces idealness and the power equalities;
        under the lattice-spanning (Ehrhart) hypothesis, idealness forces
        the flow property back.  Bounded power failures are conclusive, so
        they may only occur on instances without the flow property."""
        if self.mfmc == "undecided":
            return True
        mfmc = self.mfmc is True or self.mfmc == "vacuous"
        if mfmc and not self.ideal:
            return False
        if mfmc and not (self.ntf_upto.ok and self.closure_vs_symbolic.ok):
            return False
        if self.is_ehrhart and self.ideal and not mfmc:
            return False
        return True


def clutter_verdicts(c: RawClutter, power_bound: int = 3, budget: int | None = None) -> ClutterVerdicts:
    from . import ehrhart

    ideal_ok, _ = is_ideal_clutter(c)
    cert = is_mfmc(c, budget)
    return ClutterVerdicts(
        ideal=ideal_ok,
        mfmc=cert.verdict,
        ntf_upto=ideals.is_ntf_upto(c, power_bound),
        closure_vs_symbolic=ideals.closure_vs_symbolic_upto(c, power_bound),
        is_ehrhart=ehrhart.analyze(c, budget).is_ehrhart,
    )
