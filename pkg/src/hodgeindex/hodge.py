"""Spectrum, Hodge numbers and signatures for quasi-homogeneous germs.

For a quasi-homogeneous germ the monodromy is semisimple, so the nilpotent
part vanishes and every graded piece of the weight filtration is primitive.
The Hodge type of a standard monomial x^a is read off from its spectral
number l = sum (a_i + 1) w_i:

* l not an integer: (p, q) = (n - floor(l), floor(l)), weight n;
* l an integer:     (p, q) = (n + 1 - l, l),           weight n + 1.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import exactlin
from .exactlin import Inertia, Matrix
from .milnor import MilnorData, WeightSystem
from .poly import Monomial
from .residue import ResiduePairing


class TwistAsymmetryError(ArithmeticError):
    """The Weil-twisted Gram matrix is not symmetric."""


@dataclass(frozen=True)
class SpectralDatum:
    monomial: Monomial
    l: Fraction
    eigenvalue_frac: Fraction
    p: int
    q: int
    weight: int
    unipotent: bool


def spectral_number(m: Monomial, ws: WeightSystem) -> Fraction:
    return sum(((a + 1) * w for a, w in zip(m, ws.weights)), Fraction(0))


def hodge_type(l: Fraction, n: int) -> tuple[int, int, int]:
    """(p, q, weight) attached to the spectral number ``l``."""
    if l.denominator == 1:
        k = int(l)
        return n + 1 - k, k, n + 1
    k = math.floor(l)
    return n - k, k, n


def spectrum(md: MilnorData, ws: WeightSystem) -> list[SpectralDatum]:
    """One datum per basis monomial, in basis order."""
    n = md.n
    out = []
    for m in md.basis.monomials:
        l = spectral_number(m, ws)
        if not 0 < l < n + 1:
            raise AssertionError(f"spectral number {l} of {m} outside (0, {n + 1})")
        p, q, w = hodge_type(l, n)
        frac = l - math.floor(l)
        out.append(SpectralDatum(m, l, frac, p, q, w, frac == 0))
    return out


@dataclass(frozen=True)
class HodgeDiamond:
    n: int
    h1: dict[tuple[int, int], int]
    hne1: dict[tuple[int, int], int]
    spectral_data: tuple[SpectralDatum, ...] = ()

    @property
    def total(self) -> int:
        return sum(self.h1.values()) + sum(self.hne1.values())


def hodge_numbers(spec: Sequence[SpectralDatum], n: int) -> HodgeDiamond:
    h1: Counter = Counter()
    hne1: Counter = Counter()
    for d in spec:
        l = d.l
        if l.denominator == 1:
            p, q = n + 1 - int(l), int(l)
            target = h1
        else:
            p, q = n - math.floor(l), math.floor(l)
            target = hne1
        if p < 0 or q < 0:
            raise ValueError(f"negative Hodge index ({p}, {q}) from spectral number {l}")
        target[(p, q)] += 1
    return HodgeDiamond(n, dict(sorted(h1.items())), dict(sorted(hne1.items())), tuple(spec))


def signature_formula(hd: HodgeDiamond) -> int:
    """sigma = sum_{p+q=n+2} (-1)^q h1 + 2 sum_{p+q>=n+3} (-1)^q h1 + sum (-1)^q hne1."""
    n = hd.n
    sigma = 0
    for (p, q), h in hd.h1.items():
        if p + q == n + 2:
            sigma += (-1) ** q * h
        elif p + q >= n + 3:
            sigma += 2 * (-1) ** q * h
    for (p, q), h in hd.hne1.items():
        sigma += (-1) ** q * h
    return sigma


def parity_counts(ls: Sequence[Fraction]) -> tuple[int, int, int]:
    """(#non-integer l with even floor, #integer l, #non-integer l with odd floor)."""
    plus = minus = integer = 0
    for l in ls:
        num, den = l.numerator, l.denominator
        if den == 1:
            integer += 1
        elif (num // den) % 2 == 0:
            plus += 1
        else:
            minus += 1
    return plus, integer, minus


def weil_twist(md: MilnorData, spec: Sequence[SpectralDatum]) -> tuple[int, ...]:
    if [d.monomial for d in spec] != list(md.basis.monomials):
        raise ValueError("spectral data does not follow the basis order")
    return tuple(-1 if d.p % 2 else 1 for d in spec)


def apply_twist(gram: Sequence[Sequence[Fraction]], t: Sequence[int]) -> Matrix:
    return [[v * t[j] for j, v in enumerate(row)] for row in gram]


def twisted_gram(rp: ResiduePairing, t: Sequence[int]) -> Matrix:
    """gram[i][j] * t[j]; raises TwistAsymmetryError when the result is not symmetric."""
    if len(t) != rp.md.mu:
        raise ValueError(f"twist has length {len(t)}, expected {rp.md.mu}")
    m = apply_twist(rp.gram, t)
    if not exactlin.is_symmetric(m):
        raise TwistAsymmetryError("twisted Gram matrix is not symmetric")
    return m


@dataclass(frozen=True)
class SpectralBlock:
    l: Fraction
    partner: Fraction
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    invertible: bool


@dataclass(frozen=True)
class BlockCheck:
    law_holds: bool
    violations: tuple[tuple[int, int], ...]
    blocks: tuple[SpectralBlock, ...]

    @property
    def all_invertible(self) -> bool:
        return all(b.invertible for b in self.blocks)


def block_structure(gram: Sequence[Sequence[Fraction]], spec: Sequence[SpectralDatum], n: int) -> BlockCheck:
    """Check gram[i][j] != 0 => l_i + l_j = n + 1 and that each V_l x V_{n+1-l} block is invertible."""
    ls = [d.l for d in spec]
    violations = tuple(
        (i, j)
        for i in range(len(ls))
        for j in range(i, len(ls))
        if gram[i][j] != 0 and ls[i] + ls[j] != n + 1
    )
    groups: dict[Fraction, list[int]] = defaultdict(list)
    for i, l in enumerate(ls):
        groups[l].append(i)
    blocks = []
    for l in sorted(groups):
        partner = n + 1 - l
        if partner < l:
            continue
        rows = tuple(groups[l])
        cols = tuple(groups.get(partner, ()))
        ok = len(rows) == len(cols) and exactlin.det([[gram[i][j] for j in cols] for i in rows]) != 0
        blocks.append(SpectralBlock(l, partner, rows, cols, ok))
    return BlockCheck(not violations, violations, tuple(blocks))


def graded_nondegeneracy(twisted: Sequence[Sequence[Fraction]], spec: Sequence[SpectralDatum]) -> dict[int, bool]:
    """Non-degeneracy of the twisted pairing on each weight-graded piece.

    With vanishing nilpotent part every graded piece is primitive and the
    Lefschetz decomposition is trivial, so this is the whole graded check.
    """
    by_weight: dict[int, list[int]] = defaultdict(list)
    for i, d in enumerate(spec):
        by_weight[d.weight].append(i)
    return {
        w: exactlin.det([[twisted[i][j] for j in idx] for i in idx]) != 0
        for w, idx in sorted(by_weight.items())
    }


@dataclass(frozen=True)
class SignatureReport:
    n: int
    sigma_formula: int
    parity_counts: tuple[int, int, int]
    inertia_raw: Inertia
    inertia_twisted: Optional[Inertia]
    twist: tuple[int, ...]
    twist_symmetric: bool
    block_law: bool
    blocks_invertible: bool
    graded_nondegenerate: dict[int, bool]
    agreement: dict[str, Optional[bool]] = field(default_factory=dict)


def compare(md: MilnorData, ws: WeightSystem, rp: ResiduePairing) -> SignatureReport:
    """Put the Hodge-number signature next to the inertias of the raw and twisted pairings.

    Disagreements are recorded in ``agreement``, never raised. When the twist
    breaks symmetry (odd n, or integer spectral numbers) the twisted inertia
    is reported as None and its agreement flag is None.
    """
    n = md.n
    spec = spectrum(md, ws)
    if any(d.weight not in (n, n + 1) for d in spec):
        raise AssertionError("weight filtration is not pure of weights n, n+1")
    hd = hodge_numbers(spec, n)
    sigma = signature_formula(hd)
    parity = parity_counts([d.l for d in spec])
    gram = rp.gram_rows()
    raw = exactlin.inertia_ldlt(gram)
    t = weil_twist(md, spec)
    twisted_matrix = apply_twist(gram, t)
    try:
        twisted = twisted_gram(rp, t)
        tw_inertia: Optional[Inertia] = exactlin.inertia_ldlt(twisted)
        symmetric = True
    except TwistAsymmetryError:
        tw_inertia = None
        symmetric = False
    blocks = block_structure(gram, spec, n)
    graded = graded_nondegeneracy(twisted_matrix, spec)
    agreement = {
        "formula_vs_parity": sigma == parity[0] - parity[2],
        "formula_vs_raw": sigma == raw.signature,
        "formula_vs_twisted": None if tw_inertia is None else sigma == tw_inertia.signature,
        "odd_dimension_zero": (sigma == 0) if n % 2 else None,
    }
    return SignatureReport(
        n=n,
        sigma_formula=sigma,
        parity_counts=parity,
        inertia_raw=raw,
        inertia_twisted=tw_inertia,
        twist=t,
        twist_symmetric=symmetric,
        block_law=blocks.law_holds,
        blocks_invertible=blocks.all_invertible,
        graded_nondegenerate=graded,
        agreement=agreement,
    )
