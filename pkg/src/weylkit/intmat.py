"""Exact integer matrix utilities.

Everything here works over Python ints (or Fractions where unavoidable);
no floating point. Matrices are lists of lists, row-major.
"""

from __future__ import annotations

from fractions import Fraction

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy(a) -> Matrix:
    return [list(row) for row in a]


def transpose(a) -> Matrix:
    return [list(col) for col in zip(*a)]


def matmul(a, b) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(a) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = copy(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def leading_principal_minors(a) -> list[int]:
    """Determinants of the upper-left k-by-k blocks, k = 1..n."""
    n = len(a)
    return [det([row[: k + 1] for row in a[: k + 1]]) for k in range(n)]


def rational_inverse(a) -> list[list[Fraction]]:
    """Inverse over the rationals; raises ValueError if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        m[col], m[piv] = m[piv], m[col]
        inv = Fraction(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def solve_exact(a, v) -> list[Fraction]:
    """Solve a x = v exactly over the rationals (a square, nonsingular)."""
    inv = rational_inverse(a)
    return [sum(x * Fraction(y) for x, y in zip(row, v)) for row in inv]


def solve_integer(a, v) -> list[int]:
    """Solve a x = v requiring an integer solution; ValueError otherwise."""
    sol = solve_exact(a, v)
    if any(x.denominator != 1 for x in sol):
        raise ValueError("no integer solution")
    return [int(x) for x in sol]


def is_integer_matrix(a) -> bool:
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def is_unimodular(a) -> bool:
    return det(a) in (1, -1)


def hermite_rows(a) -> Matrix:
    """Canonical row Hermite normal form of the lattice spanned by the rows.

    Returns an echelon basis: pivots positive, entries above each pivot
    reduced into [0, pivot). Zero rows are dropped, so the result has one
    row per dimension of the row span.
    """
    m = [list(row) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        # clear column c below row r by gcd steps
        while True:
            nz = [i for i in range(r + 1, rows) if m[i][c] != 0]
            if not nz:
                break
            if m[r][c] == 0:
                m[r], m[nz[0]] = m[nz[0]], m[r]
                continue
            for i in nz:
                q = m[i][c] // m[r][c]
                m[i] = [x - q * y for x, y in zip(m[i], m[r])]
                if m[i][c] != 0:
                    m[r], m[i] = m[i], m[r]
        if r < rows and m[r][c] != 0:
            if m[r][c] < 0:
                m[r] = [-x for x in m[r]]
            for i in range(r):
                q = m[i][c] // m[r][c]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[r])]
            r += 1
            if r == rows:
                break
    return [row for row in m[:r]]


def smith_normal_form(a) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form with transforms: returns (u, d, v) with u a v = d.

    d is diagonal with nonnegative entries d1 | d2 | ..., and u, v are
    unimodular. Works for any rectangular integer matrix.
    """
    m = copy(a)
    rows = len(m)
    cols = len(m[0]) if rows else 0
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        m[dst] = [x + q * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in m:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(rows, cols):
        # find a pivot of least absolute value in the remaining block
        piv = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best = abs(m[i][j])
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if m[i][t] != 0:
                    add_row(i, t, -(m[i][t] // m[t][t]))
                    if m[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if m[t][j] != 0:
                    add_col(j, t, -(m[t][j] // m[t][t]))
                    if m[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        if m[t][t] < 0:
            negate_row(t)
        # enforce divisibility of the rest of the block by the pivot
        stray = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                      if m[i][j] % m[t][t] != 0), None)
        if stray is not None:
            add_row(t, stray[0], 1)
            continue
        t += 1
    return u, m, v


def diagonal(d: Matrix) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]
