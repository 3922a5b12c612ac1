"""Jacobian ideal, Milnor algebra and quasi-homogeneous weights of a germ."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactlin import solve_linear
from .groebner import (
    DEFAULT_MAX_DEGREE,
    GroebnerBasis,
    NotZeroDimensionalError,
    Staircase,
    buchberger,
    normal_form,
    staircase,
)
from .poly import DEGREVLEX, MonomialOrder, Polynomial, poly_det


class SingularityError(ValueError):
    """Input is not an isolated critical point at the origin."""


class NotCriticalError(SingularityError):
    pass


class NonIsolatedError(SingularityError):
    pass


class NonLocalError(SingularityError):
    pass


class NotQuasiHomogeneousError(ValueError):
    """Weight detection failed; ``reason`` is inconsistent, underdetermined or out-of-range."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class MilnorData:
    f: Polynomial
    jacobian_gb: GroebnerBasis
    basis: Staircase
    hessian_class: Polynomial

    @property
    def mu(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        """Fiber dimension."""
        return self.f.nvars - 1

    @property
    def vars(self) -> tuple[str, ...]:
        return self.f.vars

    @property
    def order(self) -> MonomialOrder:
        return self.jacobian_gb.order

    def nf(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.jacobian_gb)

    def coordinates(self, p: Polynomial) -> list[Fraction]:
        """Coefficients of NF(p) in the standard-monomial basis."""
        r = self.nf(p)
        return [r.coefficient(m) for m in self.basis.monomials]


def jacobian(f: Polynomial) -> list[Polynomial]:
    return [f.partial(i) for i in range(f.nvars)]


def hessian(f: Polynomial) -> Polynomial:
    """Determinant of the matrix of second partials."""
    grads = jacobian(f)
    return poly_det([[g.partial(j) for j in range(f.nvars)] for g in grads])


def check_local(md: MilnorData) -> bool:
    """True iff every variable is nilpotent in the quotient, i.e. V(J) = {0}."""
    k = md.mu
    for i, name in enumerate(md.vars):
        xk = Polynomial.monomial(md.vars, tuple(k if j == i else 0 for j in range(md.f.nvars)))
        if not md.nf(xk).is_zero():
            return False
    return True


def analyze_milnor(
    f: Polynomial,
    order: MonomialOrder = DEGREVLEX,
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> MilnorData:
    if f.nvars < 1:
        raise ValueError("need at least one variable")
    if f.constant_term() != 0:
        raise NotCriticalError(f"f(0) = {f.constant_term()} is not zero; subtract the constant")
    if not f.homogeneous_part(1).is_zero():
        raise NotCriticalError(f"origin is not a critical point: linear part {f.homogeneous_part(1)}")
    gb = buchberger(jacobian(f), order, max_degree=max_degree)
    try:
        basis = staircase(gb)
    except NotZeroDimensionalError as exc:
        raise NonIsolatedError(f"singularity is not isolated: {exc}") from exc
    provisional = MilnorData(f, gb, basis, Polynomial(f.vars))
    if not check_local(provisional):
        raise NonLocalError(
            "Jacobian ideal has zeros away from the origin; the global quotient is not the local "
            "Milnor algebra. Re-center the germ or choose a representative without other critical points."
        )
    hclass = normal_form(hessian(f), gb)
    if hclass.is_zero():
        raise AssertionError("Hessian class vanishes in the Milnor algebra")
    return MilnorData(f, gb, basis, hclass)


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple[Fraction, ...]

    def weighted_degree(self, m) -> Fraction:
        return sum((w * e for w, e in zip(self.weights, m)), Fraction(0))


def detect_weights(f: Polynomial) -> WeightSystem:
    """Unique weights with sum(a_i w_i) = 1 on the support of ``f``.

    Raises NotQuasiHomogeneousError when the system is inconsistent,
    underdetermined, or the solution leaves (0, 1).
    """
    if f.is_zero():
        raise ValueError("zero polynomial has no weights")
    support = sorted(f.terms)
    sol = solve_linear([list(m) for m in support], [1] * len(support))
    if not sol.consistent:
        raise NotQuasiHomogeneousError("inconsistent", "no weights make every monomial of f of degree 1")
    if sol.kernel:
        raise NotQuasiHomogeneousError(
            "underdetermined", f"weights are not unique ({len(sol.kernel)}-dimensional family)"
        )
    weights = sol.particular
    if not all(0 < w < 1 for w in weights):
        raise NotQuasiHomogeneousError(
            "out-of-range", "weights outside (0, 1): " + ", ".join(str(w) for w in weights)
        )
    euler = Polynomial(f.vars)
    for i, w in enumerate(weights):
        euler = euler + Polynomial.variable(f.vars, f.vars[i]) * f.partial(i) * w
    if euler != f:
        raise AssertionError("Euler identity fails for detected weights")
    return WeightSystem(tuple(weights))
