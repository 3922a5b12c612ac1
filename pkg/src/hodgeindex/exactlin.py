"""Exact rational linear algebra: determinants, inertia, linear solves.

Everything here works over :class:`fractions.Fraction`; there is no floating
point anywhere in the module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    def __str__(self) -> str:
        return f"(+{self.positive}, -{self.negative}, 0:{self.zero})"


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Copy ``rows`` into a fresh list-of-lists of Fractions."""
    return [[Fraction(v) for v in row] for row in rows]


def is_square(m: Sequence[Sequence]) -> bool:
    return all(len(row) == len(m) for row in m)


def is_symmetric(m: Sequence[Sequence]) -> bool:
    n = len(m)
    return is_square(m) and all(m[i][j] == m[j][i] for i in range(n) for j in range(i + 1, n))


def transpose(m: Sequence[Sequence]) -> Matrix:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def congruence(m: Sequence[Sequence], p: Sequence[Sequence]) -> Matrix:
    """Return ``P^T M P``."""
    return matmul(matmul(transpose(p), m), p)


def _integer_rows(m: Sequence[Sequence]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; return the rows and the product of scales."""
    rows = []
    scale = 1
    for row in m:
        d = lcm(*(Fraction(v).denominator for v in row)) if row else 1
        rows.append([int(Fraction(v) * d) for v in row])
        scale *= d
    return rows, scale


def det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not is_square(m):
        raise ValueError("det requires a square matrix")
    n = len(m)
    if n == 0:
        return Fraction(1)
    a, scale = _integer_rows(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = piv
    return Fraction(sign * a[n - 1][n - 1], scale)


def _content(a: list[list[int]]) -> int:
    g = 0
    for row in a:
        for v in row:
            g = gcd(g, v)
            if g == 1:
                return 1
    return g


def inertia_ldlt(m: Sequence[Sequence]) -> Inertia:
    """Inertia by symmetric elimination with diagonal and 2x2 hyperbolic pivots.

    The matrix is first scaled to integers by a positive common denominator.
    Each Schur complement is multiplied by a positive square (or by the pivot,
    tracking its sign) so entries stay integral, then divided by the content
    of the remaining block. Both steps are congruences up to a positive
    scalar, which leaves the inertia unchanged.
    """
    if not is_symmetric(m):
        raise ValueError("inertia_ldlt requires a symmetric matrix")
    n = len(m)
    d = lcm(*(Fraction(v).denominator for row in m for v in row)) if n else 1
    a = [[int(Fraction(v) * d) for v in row] for row in m]
    pos = neg = 0
    while a:
        size = len(a)
        diag = [i for i in range(size) if a[i][i] != 0]
        if diag:
            k = min(diag, key=lambda i: abs(a[i][i]))
            piv = a[k][k]
            if piv > 0:
                pos += 1
            else:
                neg += 1
            rest = [i for i in range(size) if i != k]
            col = [a[i][k] for i in rest]
            s = 1 if piv > 0 else -1
            # piv * (R - c c^T / piv), made positive by the sign of piv
            a = [
                [s * (piv * a[i][j] - ci * cj) for j, cj in zip(rest, col)]
                for i, ci in zip(rest, col)
            ]
        else:
            off = next(((i, j) for i in range(size) for j in range(i + 1, size) if a[i][j] != 0), None)
            if off is None:
                break
            k, l = off
            b = a[k][l]
            pos += 1
            neg += 1
            rest = [i for i in range(size) if i not in (k, l)]
            ck = [a[i][k] for i in rest]
            cl = [a[i][l] for i in rest]
            # b^2 * (R - (ck cl^T + cl ck^T) / b)
            a = [
                [b * b * a[i][j] - b * (ck[x] * cl[y] + cl[x] * ck[y]) for y, j in enumerate(rest)]
                for x, i in enumerate(rest)
            ]
        g = _content(a)
        if g > 1:
            a = [[v // g for v in row] for row in a]
    return Inertia(pos, neg, n - pos - neg)


def charpoly(m: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients of det(tI - M), lowest degree first.

    Reduces to upper Hessenberg form by exact similarity transforms and then
    runs the standard Hessenberg determinant recurrence.
    """
    if not is_square(m):
        raise ValueError("charpoly requires a square matrix")
    n = len(m)
    h = to_matrix(m)
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if h[i][k - 1] != 0), None)
        if piv is None:
            continue
        if piv != k:
            h[k], h[piv] = h[piv], h[k]
            for row in h:
                row[k], row[piv] = row[piv], row[k]
        inv = 1 / h[k][k - 1]
        for i in range(k + 1, n):
            u = h[i][k - 1] * inv
            if u == 0:
                continue
            row_i, row_k = h[i], h[k]
            for j in range(k - 1, n):
                row_i[j] -= u * row_k[j]
            for row in h:
                row[k] += u * row[i]
    # p[k] is the characteristic polynomial of the leading k x k block
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        hk = h[k - 1][k - 1]
        prev = polys[k - 1]
        cur = [Fraction(0)] + prev  # t * p_{k-1}
        for i, c in enumerate(prev):
            cur[i] -= hk * c
        prod = Fraction(1)
        for i in range(1, k):
            prod *= h[k - i][k - i - 1]
            if prod == 0:
                break
            coeff = prod * h[k - i - 1][k - 1]
            for j, c in enumerate(polys[k - i - 1]):
                cur[j] -= coeff * c
        polys.append(cur)
    return polys[n]


def _sign_changes(coeffs: Sequence[Fraction]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_charpoly(m: Sequence[Sequence]) -> Inertia:
    """Inertia from the characteristic polynomial via Descartes' rule.

    All roots of the characteristic polynomial of a real symmetric matrix are
    real, so Descartes' sign-change count is exact.
    """
    if not is_symmetric(m):
        raise ValueError("inertia_charpoly requires a symmetric matrix")
    p = charpoly(m)
    zero = next(i for i, c in enumerate(p) if c != 0)
    pos = _sign_changes(p)
    neg = _sign_changes([c if i % 2 == 0 else -c for i, c in enumerate(p)])
    return Inertia(pos, neg, zero)


@dataclass(frozen=True)
class LinearSolution:
    """Result of :func:`solve_linear`; ``particular`` is None when inconsistent."""

    particular: Optional[tuple[Fraction, ...]]
    kernel: tuple[tuple[Fraction, ...], ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.consistent and not self.kernel


def rref(m: Sequence[Sequence]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    a = to_matrix(m)
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def solve_linear(a: Sequence[Sequence], b: Sequence) -> LinearSolution:
    """Solve ``a x = b`` exactly; returns a particular solution and a kernel basis."""
    if len(a) != len(b):
        raise ValueError("row count of a and length of b differ")
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug)
    kernel_cols = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fc in kernel_cols:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            if pc < ncols:
                v[pc] = -red[r][fc]
        kernel.append(tuple(v))
    if ncols in pivots:
        return LinearSolution(None, tuple(kernel))
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][ncols]
    return LinearSolution(tuple(x), tuple(kernel))
