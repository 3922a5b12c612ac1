"""Grothendieck residue pairing on the Milnor algebra via the Bezoutian.

With g_i = df/dx_i, the Bezoutian B(x, y) is the determinant of the divided
difference matrix of the g_i. Modulo J(x) + J(y) it splits as
sum_i a_i(x) b_i(y) where {a_i} and {b_i} are dual bases for the residue
pairing. Writing B = sum C[i][j] e_i(x) e_j(y) in the standard monomials
gives C = G^{-1}, G the Gram matrix of the pairing. No contour integral is
ever evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import exactlin
from .exactlin import Matrix, solve_linear
from .groebner import GroebnerBasis, reduce_terms
from .milnor import MilnorData, jacobian
from .poly import Polynomial, block_order, divide_by_difference, poly_det


class DegenerateGramError(ArithmeticError):
    """Gram matrix of the residue pairing is singular."""


def doubled_vars(vars: Sequence[str]) -> tuple[str, ...]:
    return tuple(vars) + tuple(f"{v}'" for v in vars)


def _lift_x(p: Polynomial, target: tuple[str, ...]) -> Polynomial:
    nv = p.nvars
    return Polynomial._raw(target, {m + (0,) * nv: c for m, c in p.terms.items()})


def _lift_y(p: Polynomial, target: tuple[str, ...]) -> Polynomial:
    nv = p.nvars
    return Polynomial._raw(target, {(0,) * nv + m: c for m, c in p.terms.items()})


def _prefix_to_y(p: Polynomial, j: int) -> Polynomial:
    """Rename x_0..x_{j-1} of a doubled-ring polynomial to y_0..y_{j-1}."""
    nv = p.nvars // 2
    out = {}
    for m, c in p.terms.items():
        e = list(m)
        for k in range(j):
            e[nv + k] += e[k]
            e[k] = 0
        out[tuple(e)] = c
    return Polynomial._raw(p.vars, out)


def divided_difference_matrix(f: Polynomial) -> list[list[Polynomial]]:
    """Delta[i][j] = (g_i(y_<j, x_>=j) - g_i(y_<=j, x_>j)) / (x_j - y_j)."""
    nv = f.nvars
    dv = doubled_vars(f.vars)
    grads = [_lift_x(g, dv) for g in jacobian(f)]
    out = []
    for g in grads:
        row = []
        for j in range(nv):
            num = _prefix_to_y(g, j) - _prefix_to_y(g, j + 1)
            row.append(divide_by_difference(num, j, nv + j))
        out.append(row)
    return out


class DoubledIdeal:
    """J(x) + J(y) in the doubled ring, reduced under the block order x >> y.

    The union of the Groebner basis of J in x and its copy in y is already a
    Groebner basis: leading terms stay in their own block and pairs across
    blocks have coprime leading terms.
    """

    def __init__(self, md: MilnorData):
        gb = md.jacobian_gb
        self.nv = md.f.nvars
        self.vars = doubled_vars(md.vars)
        self.order = block_order(gb.order, self.nv)
        gx = [_lift_x(g, self.vars) for g in gb.generators]
        gy = [_lift_y(g, self.vars) for g in gb.generators]
        self.generators = gx + gy
        self.leading = [g.leading_monomial(self.order) for g in self.generators]
        expected = [lm + (0,) * self.nv for lm in gb.leading] + [(0,) * self.nv + lm for lm in gb.leading]
        if self.leading != expected:
            raise AssertionError("block order moved a leading term out of its block")

    def nf(self, p: Polynomial) -> Polynomial:
        return Polynomial._raw(self.vars, reduce_terms(p.terms, self.generators, self.leading, self.order))


def bezoutian(f: Polynomial, reduce=None) -> Polynomial:
    """Determinant of the divided-difference matrix, over (x_0..x_n, y_0..y_n)."""
    return poly_det(divided_difference_matrix(f), reduce=reduce)


def dual_basis_reduce(bez: Polynomial, md: MilnorData, ideal: Optional[DoubledIdeal] = None) -> Matrix:
    """Coefficient matrix C with NF(bez) = sum C[i][j] e_i(x) e_j(y)."""
    ideal = ideal or DoubledIdeal(md)
    red = ideal.nf(bez)
    nv = md.f.nvars
    index = {m: i for i, m in enumerate(md.basis.monomials)}
    mu = md.mu
    c = [[Fraction(0)] * mu for _ in range(mu)]
    for m, v in red.terms.items():
        i = index.get(m[:nv])
        j = index.get(m[nv:])
        if i is None or j is None:
            raise AssertionError(f"reduced Bezoutian has a term outside the basis product: {m}")
        c[i][j] = v
    return c


def residue_functional(c: Matrix, md: MilnorData) -> list[Fraction]:
    """res(e_m) for each basis monomial: the row of C^{-1} at the unit monomial."""
    unit = md.basis.index((0,) * md.f.nvars)
    mu = md.mu
    rhs = [Fraction(int(i == unit)) for i in range(mu)]
    sol = solve_linear(exactlin.transpose(c), rhs)
    if not sol.unique:
        raise DegenerateGramError("dual-basis matrix is singular")
    return list(sol.particular)


def gram_matrix(residue_on_basis: Sequence[Fraction], md: MilnorData) -> Matrix:
    """gram[i][j] = res(NF(e_i e_j)); raises DegenerateGramError if singular."""
    mons = md.basis.monomials
    mu = md.mu
    g = [[Fraction(0)] * mu for _ in range(mu)]
    for i in range(mu):
        for j in range(i, mu):
            prod = Polynomial.monomial(md.vars, tuple(a + b for a, b in zip(mons[i], mons[j])))
            coords = md.coordinates(prod)
            v = sum((a * r for a, r in zip(coords, residue_on_basis) if a), Fraction(0))
            g[i][j] = g[j][i] = v
    if exactlin.det(g) == 0:
        raise DegenerateGramError("residue pairing is degenerate")
    return g


@dataclass(frozen=True)
class ResiduePairing:
    md: MilnorData
    dual_matrix: tuple[tuple[Fraction, ...], ...]
    residue_on_basis: tuple[Fraction, ...]
    gram: tuple[tuple[Fraction, ...], ...]

    def residue(self, p: Polynomial) -> Fraction:
        """res_{f,0} of an arbitrary polynomial, through its normal form."""
        return sum((a * r for a, r in zip(self.md.coordinates(p), self.residue_on_basis)), Fraction(0))

    def pair(self, p: Polynomial, q: Polynomial) -> Fraction:
        return self.residue(p * q)

    def gram_rows(self) -> Matrix:
        return [list(row) for row in self.gram]


def residue_pairing(md: MilnorData) -> ResiduePairing:
    ideal = DoubledIdeal(md)
    bez = bezoutian(md.f, reduce=ideal.nf)
    c = dual_basis_reduce(bez, md, ideal)
    if exactlin.det(c) == 0:
        raise DegenerateGramError("dual-basis matrix is singular")
    res = residue_functional(c, md)
    g = gram_matrix(res, md)
    return ResiduePairing(
        md,
        tuple(tuple(r) for r in c),
        tuple(res),
        tuple(tuple(r) for r in g),
    )
