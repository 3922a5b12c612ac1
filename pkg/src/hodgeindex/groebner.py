"""Buchberger's algorithm over Q, normal forms and staircases."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .poly import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
)

DEFAULT_MAX_DEGREE = 60
DEFAULT_MAX_PAIRS = 200_000


class GroebnerBudgetError(RuntimeError):
    """Raised when Buchberger exceeds its degree or pair budget."""


class NotZeroDimensionalError(ValueError):
    def __init__(self, variable: str):
        super().__init__(f"quotient is not finite-dimensional: no pure power of {variable} among leading terms")
        self.variable = variable


@dataclass(frozen=True)
class GroebnerBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    original: tuple[Polynomial, ...] = ()
    leading: tuple[Monomial, ...] = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "leading", tuple(g.leading_monomial(self.order) for g in self.generators))

    @property
    def vars(self) -> tuple[str, ...]:
        if self.generators:
            return self.generators[0].vars
        return self.original[0].vars

    def is_unit_ideal(self) -> bool:
        return any(sum(m) == 0 for m in self.leading)


def reduce_terms(
    terms: dict[Monomial, Fraction],
    gens: Sequence[Polynomial],
    leading: Sequence[Monomial],
    order: MonomialOrder,
) -> dict[Monomial, Fraction]:
    """Full reduction of a term map by monic ``gens`` with the given leading monomials."""
    p = dict(terms)
    key = order.key
    tails = [[(m, c) for m, c in g.terms.items() if m != lm] for g, lm in zip(gens, leading)]
    heap = [tuple(-k for k in key(m)) + (m,) for m in p]
    heapq.heapify(heap)
    rem: dict[Monomial, Fraction] = {}
    while heap:
        m = heapq.heappop(heap)[-1]
        c = p.pop(m, None)
        if c is None:
            continue
        for lm, tail in zip(leading, tails):
            if divides(lm, m):
                q = mono_div(m, lm)
                for tm, tc in tail:
                    t = mono_mul(tm, q)
                    old = p.get(t)
                    if old is None:
                        p[t] = -c * tc
                        heapq.heappush(heap, tuple(-k for k in key(t)) + (t,))
                    else:
                        v = old - c * tc
                        if v:
                            p[t] = v
                        else:
                            del p[t]
                break
        else:
            rem[m] = c
    return rem


def normal_form(p: Polynomial, g: GroebnerBasis) -> Polynomial:
    """The remainder of ``p`` on full reduction by ``g``; no term is divisible by a leading term."""
    if p.vars != g.vars:
        raise ValueError(f"variable mismatch: {p.vars} vs {g.vars}")
    return Polynomial._raw(p.vars, reduce_terms(p.terms, g.generators, g.leading, g.order))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf, lg = f.leading_monomial(order), g.leading_monomial(order)
    l = mono_lcm(lf, lg)
    return f.mul_term(mono_div(l, lf), 1 / f.terms[lf]) - g.mul_term(mono_div(l, lg), 1 / g.terms[lg])


def _interreduce(gens: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    lead = [g.leading_monomial(order) for g in gens]
    keep = [
        i
        for i, m in enumerate(lead)
        if not any(j != i and divides(lead[j], m) and (lead[j] != m or j < i) for j in range(len(gens)))
    ]
    minimal = [gens[i] for i in keep]
    mlead = [lead[i] for i in keep]
    out = []
    for i, g in enumerate(minimal):
        others = [h for j, h in enumerate(minimal) if j != i]
        olead = [m for j, m in enumerate(mlead) if j != i]
        tail = {m: c for m, c in g.terms.items() if m != mlead[i]}
        red = reduce_terms(tail, others, olead, order)
        red[mlead[i]] = Fraction(1)
        out.append(Polynomial._raw(g.vars, red))
    out.sort(key=lambda h: order.key(h.leading_monomial(order)))
    return out


def buchberger(
    gens: Sequence[Polynomial],
    order: MonomialOrder = DEGREVLEX,
    max_degree: int = DEFAULT_MAX_DEGREE,
    max_pairs: int = DEFAULT_MAX_PAIRS,
) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses normal pair selection (smallest lcm first), the coprime leading term
    criterion and the Gebauer-Moeller chain criterion.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("buchberger needs at least one generator")
    vars = gens[0].vars
    if any(g.vars != vars for g in gens):
        raise ValueError("generators must share a variable set")
    original = tuple(gens)
    basis: list[Polynomial] = []
    lead: list[Monomial] = []
    pairs: list[tuple[tuple[int, ...], int, int, Monomial]] = []
    key = order.key
    processed = 0

    def add(h: Polynomial):
        nonlocal pairs
        h = h.monic(order)
        lh = h.leading_monomial(order)
        k = len(basis)
        # chain criterion on existing pairs
        kept = []
        for entry in pairs:
            _, i, j, lij = entry
            if (
                divides(lh, lij)
                and mono_lcm(lead[i], lh) != lij
                and mono_lcm(lead[j], lh) != lij
            ):
                continue
            kept.append(entry)
        # new pairs, minimal lcms only
        cand = {}
        for i, li in enumerate(lead):
            cand.setdefault(mono_lcm(li, lh), []).append(i)
        new = []
        lcms = sorted(cand, key=key)
        chosen: list[Monomial] = []
        for l in lcms:
            if any(divides(c, l) for c in chosen):
                continue
            chosen.append(l)
            idx = cand[l]
            if any(mono_mul(lead[i], lh) == l for i in idx):
                continue  # coprime leading terms
            new.append((key(l), idx[0], k, l))
        basis.append(h)
        lead.append(lh)
        pairs = kept + new
        heapq.heapify(pairs)

    for g in gens:
        r = reduce_terms(g.terms, basis, lead, order)
        if r:
            add(Polynomial._raw(vars, r))

    while pairs:
        _, i, j, l = heapq.heappop(pairs)
        processed += 1
        if processed > max_pairs:
            raise GroebnerBudgetError(f"pair budget {max_pairs} exceeded")
        if sum(l) > max_degree:
            raise GroebnerBudgetError(f"pair degree {sum(l)} exceeds bound {max_degree}")
        s = s_polynomial(basis[i], basis[j], order)
        r = reduce_terms(s.terms, basis, lead, order)
        if r:
            add(Polynomial._raw(vars, r))

    final = _interreduce(basis, order)
    return GroebnerBasis(tuple(final), order, original)


def is_groebner(g: GroebnerBasis) -> bool:
    """Buchberger criterion: every S-polynomial reduces to zero."""
    gens = g.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            s = s_polynomial(gens[i], gens[j], g.order)
            if reduce_terms(s.terms, gens, g.leading, g.order):
                return False
    return True


def is_reduced(g: GroebnerBasis) -> bool:
    for i, gi in enumerate(g.generators):
        if gi.terms[g.leading[i]] != 1:
            return False
        for m in gi.terms:
            if any(j != i and divides(lj, m) for j, lj in enumerate(g.leading)):
                return False
    return True


def is_zero_dimensional(g: GroebnerBasis) -> bool:
    return _missing_pure_power(g) is None


def _missing_pure_power(g: GroebnerBasis) -> Optional[int]:
    if g.is_unit_ideal():
        return None
    nv = len(g.vars)
    for v in range(nv):
        if not any(m[v] > 0 and sum(m) == m[v] for m in g.leading):
            return v
    return None


@dataclass(frozen=True)
class Staircase:
    monomials: tuple[Monomial, ...]
    vars: tuple[str, ...]
    order: MonomialOrder

    def __len__(self):
        return len(self.monomials)

    def index(self, m: Monomial) -> int:
        return self.monomials.index(m)


def staircase(g: GroebnerBasis) -> Staircase:
    """Standard monomials of a zero-dimensional ideal, sorted by (degree, order)."""
    missing = _missing_pure_power(g)
    if missing is not None:
        raise NotZeroDimensionalError(g.vars[missing])
    nv = len(g.vars)
    lead = g.leading
    if g.is_unit_ideal():
        return Staircase((), g.vars, g.order)
    seen = {(0,) * nv}
    frontier = [(0,) * nv]
    while frontier:
        nxt = []
        for m in frontier:
            for v in range(nv):
                u = m[:v] + (m[v] + 1,) + m[v + 1 :]
                if u in seen or any(divides(l, u) for l in lead):
                    continue
                seen.add(u)
                nxt.append(u)
        frontier = nxt
    mons = sorted(seen, key=lambda m: (sum(m), g.order.key(m)))
    return Staircase(tuple(mons), g.vars, g.order)
