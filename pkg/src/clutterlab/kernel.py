"""Exact rational and integer linear algebra.

Everything here is over arbitrary-precision integers and `fractions.Fraction`;
no floating point anywhere.  Elimination is fraction-free (Bareiss) so
intermediate entries stay integral and growth stays polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import UsageError

Rational = Fraction

Vector = tuple  # tuple of int or Fraction
Matrix = tuple  # tuple of Vector rows


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise UsageError(f"dot: dimension mismatch {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vadd(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, u: Sequence) -> tuple:
    return tuple(c * a for a in u)


def is_zero(u: Sequence) -> bool:
    return all(a == 0 for a in u)


def _integer_row(row: Sequence) -> list[int]:
    """Scale a rational row by a positive factor so all entries are int."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in row]


def rank(matrix: Sequence[Sequence]) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    m = [_integer_row(row) for row in matrix]
    nrows = len(m)
    if nrows == 0:
        return 0
    ncols = len(m[0])
    if any(len(row) != ncols for row in m):
        raise UsageError("rank: ragged matrix")
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            # the pivot rescaling applies even when m[i][c] is zero;
            # skipping it breaks the exact-division invariant later
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == nrows:
            break
    return r


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise UsageError("determinant: matrix not square")
    if n == 0:
        return 1
    m = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                m[i][j] = (m[c][c] * m[i][j] - m[i][c] * m[c][j]) // prev
            m[i][c] = 0
        prev = m[c][c]
    return sign * m[n - 1][n - 1]


def solve(matrix: Sequence[Sequence], rhs: Sequence) -> tuple[Fraction, ...] | None:
    """One exact solution of M x = b, or None if the system is inconsistent.

    Free variables are set to zero.  Raises UsageError on dimension mismatch.
    """
    nrows = len(matrix)
    if nrows != len(rhs):
        raise UsageError(f"solve: {nrows} rows vs {len(rhs)} rhs entries")
    if nrows == 0:
        return ()
    ncols = len(matrix[0])
    aug = [_integer_row(list(row) + [b]) for row, b in zip(matrix, rhs)]
    if any(len(row) != ncols + 1 for row in aug):
        raise UsageError("solve: ragged matrix")
    piv_cols: list[int] = []
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols + 1):
                aug[i][j] = (aug[r][c] * aug[i][j] - aug[i][c] * aug[r][j]) // prev
            aug[i][c] = 0
        prev = aug[r][c]
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    for i in range(r, nrows):
        if aug[i][ncols] != 0:
            return None
    sol = [Fraction(0)] * ncols
    for i in range(len(piv_cols) - 1, -1, -1):
        c = piv_cols[i]
        s = Fraction(aug[i][ncols])
        for j in range(c + 1, ncols):
            s -= aug[i][j] * sol[j]
        sol[c] = s / aug[i][c]
    return tuple(sol)


def clear_denominators(vec: Sequence) -> tuple[tuple[int, ...], Fraction]:
    """Primitive integer vector parallel to `vec`, plus the positive scale.

    Returns (w, s) with w = s * vec, s > 0 and gcd of the entries of w = 1.
    """
    if all(x == 0 for x in vec):
        raise UsageError("clear_denominators: zero vector")
    den = 1
    for x in vec:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(x * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints), Fraction(den, g)


def primitive(vec: Sequence) -> tuple[int, ...]:
    """Primitive integer vector parallel to `vec` (same direction)."""
    return clear_denominators(vec)[0]


# ---------------------------------------------------------------------------
# Integer lattice algebra (Smith normal form and friends)
# ---------------------------------------------------------------------------


def smith_normal_form(matrix: Sequence[Sequence[int]]):
    """Smith normal form with transforms: returns (U, D, V), U*A*V = D.

    U (rows x rows) and V (cols x cols) are unimodular; D is diagonal with
    d_1 | d_2 | ... >= 0.  Straightforward pivoting implementation, adequate
    at desk scale.
    """
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    a = [list(row) for row in matrix]
    u = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    v = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    rmax = min(nrows, ncols)

    def row_op(i, j, q):  # row_i -= q * row_j
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in a:
            row[i] -= q * row[j]
        for row in v:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def diagonalize_from(t0: int):
        for t in range(t0, rmax):
            piv = None
            best = None
            for i in range(t, nrows):
                for j in range(t, ncols):
                    if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                        best = abs(a[i][j])
                        piv = (i, j)
            if piv is None:
                return
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            while True:
                for i in range(t + 1, nrows):
                    if a[i][t] != 0:
                        row_op(i, t, a[i][t] // a[t][t])
                rem = [i for i in range(t + 1, nrows) if a[i][t] != 0]
                if rem:
                    swap_rows(t, min(rem, key=lambda i: abs(a[i][t])))
                    continue
                for j in range(t + 1, ncols):
                    if a[t][j] != 0:
                        col_op(j, t, a[t][j] // a[t][t])
                rem = [j for j in range(t + 1, ncols) if a[t][j] != 0]
                if rem:
                    swap_cols(t, min(rem, key=lambda j: abs(a[t][j])))
                    continue
                break
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]

    diagonalize_from(0)
    while True:  # enforce the divisibility chain d_i | d_{i+1}
        problem = None
        for i in range(rmax - 1):
            di, dj = a[i][i], a[i + 1][i + 1]
            if di == 0 and dj != 0:
                problem = ("swap", i)
                break
            if di != 0 and dj % di != 0:
                problem = ("fold", i)
                break
        if problem is None:
            break
        kind, i = problem
        if kind == "swap":
            swap_rows(i, i + 1)
            swap_cols(i, i + 1)
        else:
            col_op(i, i + 1, -1)  # creates an off-diagonal entry, then redo
            diagonalize_from(i)
    return (
        tuple(tuple(r) for r in u),
        tuple(tuple(r) for r in a),
        tuple(tuple(r) for r in v),
    )


def integer_kernel_basis(matrix: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Basis of the lattice {x in Z^n : A x = 0} (columns of V at zero pivots)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    if nrows == 0:
        return tuple(tuple(int(i == j) for i in range(ncols)) for j in range(ncols))
    _, d, v = smith_normal_form(matrix)
    r = sum(1 for i in range(min(nrows, ncols)) if d[i][i] != 0)
    basis = []
    for j in range(r, ncols):
        basis.append(tuple(v[i][j] for i in range(ncols)))
    return tuple(basis)


def integer_solve(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> tuple[int, ...] | None:
    """One integer solution of A x = b, or None if no integral solution exists."""
    nrows = len(matrix)
    if nrows == 0:
        return ()
    ncols = len(matrix[0])
    u, d, v = smith_normal_form(matrix)
    c = [dot(u[i], rhs) for i in range(nrows)]
    y = [0] * ncols
    for i in range(nrows):
        di = d[i][i] if i < min(nrows, ncols) else 0
        if di != 0:
            if c[i] % di != 0:
                return None
            y[i] = c[i] // di
        elif c[i] != 0:
            return None
    return tuple(dot(v[i], y) for i in range(ncols))


def unimodular_inverse(u: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of a unimodular integer matrix (still integral)."""
    n = len(u)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = integer_solve(u, e)
        if x is None:
            raise UsageError("unimodular_inverse: matrix is not unimodular")
        cols.append(x)
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))
