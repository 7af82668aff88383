"""Exact polyhedra over the rationals: double description, faces, lattice points.

Both descriptions are first-class:

* `HRep`: inequalities <normal, x> <= rhs plus equations, integer data.
* `VRep`: generating points (vertices when the polyhedron is pointed),
  recession rays and lineality directions.

Conversions run the double description method on the homogenization cone,
entirely in exact integer arithmetic.  The empty polyhedron is a value, not
an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd
from typing import Iterable, Sequence

from . import kernel
from .errors import DEFAULT_RAY_CAP, ResourceExceeded, UsageError

IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]


@dataclass(frozen=True)
class HRep:
    """Inequalities <a,x> <= b and equations <c,x> = d with integer data."""

    n: int
    ineqs: tuple[tuple[IntVec, int], ...]
    eqs: tuple[tuple[IntVec, int], ...] = ()

    def __post_init__(self):
        for a, _ in self.ineqs + self.eqs:
            if len(a) != self.n:
                raise UsageError("HRep: normal of wrong dimension")


@dataclass(frozen=True)
class VRep:
    """Generators: conv(vertices) + cone(rays) + span(lines)."""

    n: int
    vertices: tuple[RatVec, ...]
    rays: tuple[IntVec, ...] = ()
    lines: tuple[IntVec, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @property
    def is_bounded(self) -> bool:
        return not self.rays and not self.lines


@dataclass(frozen=True)
class Face:
    """A minimal face: active inequality indices, dimension, interior point."""

    active: tuple[int, ...]
    dimension: int
    point: RatVec


def _canon_ineq(a: Sequence[int], b: int) -> tuple[IntVec, int]:
    g = 0
    for x in a:
        g = gcd(g, abs(x))
    g = gcd(g, abs(b))
    if g > 1:
        return tuple(x // g for x in a), b // g
    return tuple(a), b


def _canon_eq(a: Sequence[int], b: int) -> tuple[IntVec, int]:
    a2, b2 = _canon_ineq(a, b)
    for x in a2:
        if x < 0:
            return tuple(-y for y in a2), -b2
        if x > 0:
            break
    if all(x == 0 for x in a2) and b2 < 0:
        return a2, -b2
    return a2, b2


def canonical_hrep(h: HRep) -> HRep:
    """Deduplicated, normalized, lexicographically sorted copy of `h`."""
    ineqs = sorted({_canon_ineq(a, b) for a, b in h.ineqs})
    eqs = sorted({_canon_eq(a, b) for a, b in h.eqs})
    return HRep(h.n, tuple(ineqs), tuple(eqs))


# ---------------------------------------------------------------------------
# Double description on cones:  {x : <a,x> <= 0 for a in normals}
# ---------------------------------------------------------------------------


def _dd_cone(normals: Sequence[IntVec], n: int, ray_cap: int = DEFAULT_RAY_CAP):
    """Generators (rays, lines) of the cone cut out by homogeneous normals.

    Rays come back as primitive integer vectors together with their tight-set
    bitmask over `normals`; lines form a basis of the lineality space and are
    tight at every processed constraint.  Adjacency during insertion is
    decided by the rank of the common tight set.
    """
    lines: list[IntVec] = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    rays: list[tuple[IntVec, int]] = []
    rank_cache: dict[int, int] = {}

    for idx, a in enumerate(normals):
        bit = 1 << idx
        if all(x == 0 for x in a):
            rays = [(r, m | bit) for r, m in rays]
            continue
        cut = next((i for i, l in enumerate(lines) if kernel.dot(a, l) != 0), None)
        if cut is not None:
            l0 = lines.pop(cut)
            v0 = kernel.dot(a, l0)
            if v0 > 0:
                l0 = tuple(-x for x in l0)
                v0 = -v0
            new_lines = []
            for l in lines:
                vl = kernel.dot(a, l)
                if vl != 0:
                    l = kernel.primitive(kernel.vsub(l, kernel.vscale(Fraction(vl, v0), l0)))
                new_lines.append(l)
            lines = new_lines
            new_rays = []
            for r, m in rays:
                vr = kernel.dot(a, r)
                if vr != 0:
                    # project along l0 into the hyperplane, keeping direction
                    r = kernel.primitive(kernel.vsub(r, kernel.vscale(Fraction(vr, v0), l0)))
                new_rays.append((r, m | bit))
            # the cut line survives as the ray pointing into the halfspace
            mask_all = (1 << idx) - 1  # tight at every earlier constraint
            new_rays.append((l0, mask_all))
            rays = new_rays
            continue
        # all lines lie in the hyperplane; split rays by sign
        vals = [kernel.dot(a, r) for r, _ in rays]
        if all(v <= 0 for v in vals):
            rays = [(r, m | bit if v == 0 else m) for (r, m), v in zip(rays, vals)]
            continue
        neg = [(r, m, v) for (r, m), v in zip(rays, vals) if v < 0]
        zero = [(r, m | bit) for (r, m), v in zip(rays, vals) if v == 0]
        pos = [(r, m, v) for (r, m), v in zip(rays, vals) if v > 0]
        target = n - len(lines) - 2

        def tightset_rank(mask: int) -> int:
            got = rank_cache.get(mask)
            if got is None:
                rows = [normals[i] for i in range(idx) if mask >> i & 1]
                got = kernel.rank(rows)
                rank_cache[mask] = got
            return got

        combos = []
        for rp, mp, vp in pos:
            for rm, mm, vm in neg:
                common = mp & mm
                if tightset_rank(common) != target:
                    continue
                new = kernel.vsub(kernel.vscale(vp, rm), kernel.vscale(vm, rp))
                combos.append((kernel.primitive(new), common | bit))
        rays = [(r, m) for r, m, _ in neg] + zero + combos
        if len(rays) > ray_cap:
            raise ResourceExceeded("double description ray count", ray_cap)

    return rays, lines


def dd_convert(rep):
    """Exact dual description: HRep -> VRep or VRep -> HRep (both minimal)."""
    if isinstance(rep, HRep):
        return _h_to_v(rep)
    if isinstance(rep, VRep):
        return _v_to_h(rep)
    raise UsageError(f"dd_convert: expected HRep or VRep, got {type(rep).__name__}")


def _h_to_v(h: HRep, ray_cap: int = DEFAULT_RAY_CAP) -> VRep:
    h = canonical_hrep(h)
    n = h.n
    normals: list[IntVec] = [(0,) * n + (-1,)]  # homogenization: t >= 0
    for a, b in h.ineqs:
        normals.append(tuple(a) + (-b,))
    for c, d in h.eqs:
        normals.append(tuple(c) + (-d,))
        normals.append(tuple(-x for x in c) + (d,))
    raw_rays, raw_lines = _dd_cone(sorted(set(normals)), n + 1, ray_cap)
    vertices: list[RatVec] = []
    rays: list[IntVec] = []
    lines: list[IntVec] = []
    for l in raw_lines:
        if l[n] != 0:
            raise AssertionError("homogenization line with nonzero height")
        lines.append(l[:n])
    for r, _ in raw_rays:
        t = r[n]
        if t > 0:
            vertices.append(tuple(Fraction(x, t) for x in r[:n]))
        elif any(x != 0 for x in r[:n]):
            rays.append(r[:n])
    if not vertices:
        return VRep(n, (), (), ())
    return VRep(n, tuple(sorted(vertices)), tuple(sorted(rays)), tuple(sorted(lines)))


def _v_to_h(v: VRep, ray_cap: int = DEFAULT_RAY_CAP) -> HRep:
    n = v.n
    if v.is_empty:
        return HRep(n, (((0,) * n, -1),), ())
    normals: list[IntVec] = []
    for p in v.vertices:
        normals.append(kernel.primitive(tuple(p) + (Fraction(1),)))
    for r in v.rays:
        normals.append(tuple(r) + (0,))
    for l in v.lines:
        normals.append(tuple(l) + (0,))
        normals.append(tuple(-x for x in l) + (0,))
    raw_rays, raw_lines = _dd_cone(sorted(normals), n + 1, ray_cap)
    ineqs = []
    eqs = []
    for r, _ in raw_rays:
        a, c = r[:n], r[n]
        if all(x == 0 for x in a):
            continue  # 0 <= -c with c <= 0: trivial
        ineqs.append(_canon_ineq(a, -c))
    for l in raw_lines:
        a, c = l[:n], l[n]
        if all(x == 0 for x in a):
            continue
        eqs.append(_canon_eq(a, -c))
    return HRep(n, tuple(sorted(set(ineqs))), tuple(sorted(set(eqs))))


def cone_generators_to_hrep(generators: Sequence[IntVec], n: int, ray_cap: int = DEFAULT_RAY_CAP):
    """Minimal H-description (ineq normals, eq normals) of cone(generators).

    Convention: x in cone  iff  <a,x> <= 0 for every inequality normal a and
    <c,x> = 0 for every equation normal c.
    """
    normals = sorted({kernel.primitive(g) for g in generators if any(x != 0 for x in g)})
    raw_rays, raw_lines = _dd_cone(normals, n, ray_cap)
    ineq_normals = tuple(sorted(r for r, _ in raw_rays))
    eq_normals = tuple(sorted(raw_lines))
    return ineq_normals, eq_normals


def cone_hrep_to_generators(ineq_normals: Sequence[IntVec], n: int, ray_cap: int = DEFAULT_RAY_CAP):
    """Generators (rays, lines) of {x : <a,x> <= 0 for all a}."""
    raw_rays, raw_lines = _dd_cone(sorted(set(ineq_normals)), n, ray_cap)
    return tuple(sorted(r for r, _ in raw_rays)), tuple(sorted(raw_lines))


# ---------------------------------------------------------------------------
# Faces, dimension, integrality
# ---------------------------------------------------------------------------


def dimension(rep) -> int:
    """Affine dimension; -1 for the empty polyhedron."""
    v = rep if isinstance(rep, VRep) else _h_to_v(rep)
    if v.is_empty:
        return -1
    p0 = v.vertices[0]
    rows = [kernel.vsub(p, p0) for p in v.vertices[1:]]
    rows.extend(v.rays)
    rows.extend(v.lines)
    return kernel.rank(rows)


def minimal_faces(h: HRep, vrep: VRep | None = None) -> tuple[Face, ...]:
    """All minimal faces of a nonempty H-polyhedron (empty input: no faces).

    Active sets index into h.ineqs as given.  Each face carries one exact
    relative-interior point; for a pointed polyhedron these are the vertices.
    """
    v = vrep if vrep is not None else _h_to_v(h)
    if v.is_empty:
        return ()
    dim = len(v.lines)
    faces = []
    seen = set()
    for p in v.vertices:
        active = tuple(i for i, (a, b) in enumerate(h.ineqs) if kernel.dot(a, p) == b)
        if active in seen:
            continue
        seen.add(active)
        faces.append(Face(active=active, dimension=dim, point=p))
    return tuple(faces)


def face_integral_point(h: HRep, face: Face) -> IntVec | None:
    """An integer point of the face, or None when the face has none."""
    if all(x.denominator == 1 for x in face.point):
        return tuple(int(x) for x in face.point)
    rows = [h.ineqs[i][0] for i in face.active] + [a for a, _ in h.eqs]
    rhs = [h.ineqs[i][1] for i in face.active] + [b for _, b in h.eqs]
    return kernel.integer_solve(rows, rhs)


def is_integral(rep, hrep: HRep | None = None):
    """Whether every minimal face contains an integer point, plus a witness.

    For pointed polyhedra this is vertex integrality; the witness on failure
    is a fractional vertex (relative-interior point of a lattice-free face).
    """
    if isinstance(rep, VRep):
        v = rep
    else:
        hrep = rep if hrep is None else hrep
        v = _h_to_v(rep)
    if v.is_empty:
        raise UsageError("is_integral: empty polyhedron")
    if not v.lines:
        for p in v.vertices:
            if any(x.denominator != 1 for x in p):
                return False, p
        return True, None
    if hrep is None:
        hrep = _v_to_h(v)
    for face in minimal_faces(hrep, v):
        if face_integral_point(hrep, face) is None:
            return False, face.point
    return True, None


# ---------------------------------------------------------------------------
# Lattice point enumeration
# ---------------------------------------------------------------------------


def _scan_box(lo: list[int], hi: list[int], ineqs, eqs, strict: bool):
    """Integer points in the box satisfying all constraints, DFS with pruning.

    `ineqs` are (normal, rhs) meaning <a,x> <= rhs (< rhs when strict);
    `eqs` must hold exactly.  Points come out in lexicographic order.
    """
    n = len(lo)
    cons = [(a, b, False) for a, b in ineqs] + [(a, b, True) for a, b in eqs]
    # suffix bounds: smallest/largest achievable value of <a, x[k:]> over the box
    suf_min = []
    suf_max = []
    for a, _, _ in cons:
        mins = [0] * (n + 1)
        maxs = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            lo_term = min(a[k] * lo[k], a[k] * hi[k])
            hi_term = max(a[k] * lo[k], a[k] * hi[k])
            mins[k] = mins[k + 1] + lo_term
            maxs[k] = maxs[k + 1] + hi_term
        suf_min.append(mins)
        suf_max.append(maxs)

    out: list[IntVec] = []
    point = [0] * n

    def rec(k: int, partial: tuple[int, ...]):
        if k == n:
            if strict and any(
                not is_eq and s >= b for s, (a, b, is_eq) in zip(partial, cons)
            ):
                return
            out.append(tuple(point))
            return
        for x in range(lo[k], hi[k] + 1):
            point[k] = x
            nxt = []
            ok = True
            for s, (a, b, is_eq), mins, maxs in zip(partial, cons, suf_min, suf_max):
                s2 = s + a[k] * x
                rest_lo = s2 + mins[k + 1]
                rest_hi = s2 + maxs[k + 1]
                if is_eq:
                    if rest_lo > b or rest_hi < b:
                        ok = False
                        break
                elif rest_lo > b:
                    ok = False
                    break
                nxt.append(s2)
            if ok:
                rec(k + 1, tuple(nxt))
        point[k] = 0

    rec(0, tuple(0 for _ in cons))
    return out


def lattice_points(v: VRep, b: int, hrep: HRep | None = None) -> tuple[IntVec, ...]:
    """All integer points of the dilation b*P for a polytope P."""
    if b < 0:
        raise UsageError("lattice_points: dilation must be nonnegative")
    if v.is_empty:
        raise UsageError("lattice_points: empty polytope")
    if not v.is_bounded:
        raise UsageError("lattice_points: polyhedron is unbounded")
    if b == 0:
        return ((0,) * v.n,)
    h = hrep if hrep is not None else _v_to_h(v)
    lo = [ceil(min(b * p[k] for p in v.vertices)) for k in range(v.n)]
    hi = [floor(max(b * p[k] for p in v.vertices)) for k in range(v.n)]
    if any(l > u for l, u in zip(lo, hi)):
        return ()
    ineqs = [(a, rhs * b) for a, rhs in h.ineqs]
    eqs = [(a, rhs * b) for a, rhs in h.eqs]
    return tuple(_scan_box(lo, hi, ineqs, eqs, strict=False))


def relative_interior_lattice_points(v: VRep, b: int, hrep: HRep | None = None) -> tuple[IntVec, ...]:
    """Integer points strictly inside every facet of b*P, exactly on its hull."""
    if b < 0:
        raise UsageError("relative_interior_lattice_points: dilation must be nonnegative")
    if v.is_empty:
        raise UsageError("relative_interior_lattice_points: empty polytope")
    if not v.is_bounded:
        raise UsageError("relative_interior_lattice_points: polyhedron is unbounded")
    if b == 0:
        return ((0,) * v.n,)
    h = hrep if hrep is not None else _v_to_h(v)
    lo = [ceil(min(b * p[k] for p in v.vertices)) for k in range(v.n)]
    hi = [floor(max(b * p[k] for p in v.vertices)) for k in range(v.n)]
    if any(l > u for l, u in zip(lo, hi)):
        return ()
    ineqs = [(a, rhs * b) for a, rhs in h.ineqs]
    eqs = [(a, rhs * b) for a, rhs in h.eqs]
    return tuple(_scan_box(lo, hi, ineqs, eqs, strict=True))


def contains_point(h: HRep, x: Sequence) -> bool:
    return all(kernel.dot(a, x) <= b for a, b in h.ineqs) and all(
        kernel.dot(a, x) == b for a, b in h.eqs
    )
