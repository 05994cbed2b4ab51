"""Exact linear algebra over the integers and rationals.

Matrices are lists of rows; entries are ``int`` or ``Fraction``.  Everything
here is deterministic so that canonical forms built on top of it are
reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

Matrix = List[List[Fraction]]
IntMatrix = List[List[int]]


def to_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(rows: Sequence[Sequence]) -> list:
    if not rows:
        return []
    return [list(col) for col in zip(*rows)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v: Sequence, m: Sequence[Sequence]) -> list:
    """Row vector times matrix."""
    if not m:
        return []
    ncols = len(m[0])
    out = [0] * ncols
    for x, row in zip(v, m):
        if x:
            for j in range(ncols):
                out[j] += x * row[j]
    return out


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    m = to_fraction_matrix(rows)
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    """Basis (as rows) of ``{x : rows @ x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -m[i][f]
        basis.append(v)
    return basis


def inverse(rows: Sequence[Sequence]) -> Matrix:
    n = len(rows)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(rows)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m]


def left_inverse(rows: Sequence[Sequence]) -> Matrix:
    """For ``rows`` (k x n) of full row rank, a matrix P (n x k) with rows @ P = I.

    Computed as ``rows^T (rows rows^T)^{-1}``.
    """
    if not rows:
        return []
    gram = matmul(rows, transpose(rows))
    return matmul(transpose(to_fraction_matrix(rows)), inverse(gram))


def common_denominator(rows: Sequence[Sequence[Fraction]]) -> int:
    den = 1
    for row in rows:
        for x in row:
            d = Fraction(x).denominator
            den = den * d // _gcd(den, d)
    return den


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def smith_normal_form(a: Sequence[Sequence[int]]) -> Tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with unimodular transforms.

    Returns ``(U, D, V)`` with ``U @ a @ V == D``, ``D`` diagonal with
    nonnegative entries ``d_1 | d_2 | ...`` followed by zeros.  Pivot choice
    is deterministic: the entry of smallest absolute value in the remaining
    block, ties broken by (row, column).
    """
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    d = [list(map(int, row)) for row in a]
    u = identity(nrows)
    v = identity(ncols)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row_dst += k * row_src
        d[dst] = [x + k * y for x, y in zip(d[dst], d[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col_dst += k * col_src
        for row in d:
            row[dst] += k * row[src]
        for row in v:
            row[dst] += k * row[src]

    t = 0
    while t < min(nrows, ncols):
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if d[i][j] and (best is None or abs(d[i][j]) < abs(d[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, nrows):
                if d[i][t]:
                    q = d[i][t] // d[t][t]
                    add_row(t, i, -q)
                    if d[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, ncols):
                if d[t][j]:
                    q = d[t][j] // d[t][t]
                    add_col(t, j, -q)
                    if d[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold any offending entry into the pivot row
            bad = next(
                ((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                 if d[i][j] % d[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, d, v


def invariant_factors(a: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> IntMatrix:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    The result is a canonical basis: echelon, positive pivots, entries above
    each pivot reduced into ``[0, pivot)``.  Zero rows are dropped.
    """
    m = [list(map(int, r)) for r in rows if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out: IntMatrix = []
    r = 0
    for c in range(ncols):
        nz = [i for i in range(r, len(m)) if m[i][c]]
        if not nz:
            continue
        while len(nz) > 1:
            p = min(nz, key=lambda i: (abs(m[i][c]), i))
            for i in nz:
                if i != p:
                    q = m[i][c] // m[p][c]
                    m[i] = [x - q * y for x, y in zip(m[i], m[p])]
            nz = [i for i in range(r, len(m)) if m[i][c]]
        p = nz[0]
        m[r], m[p] = m[p], m[r]
        if m[r][c] < 0:
            m[r] = [-x for x in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            m[i] = [x - q * y for x, y in zip(m[i], m[r])]
        r += 1
    out = [row for row in m[:r]]
    return out
