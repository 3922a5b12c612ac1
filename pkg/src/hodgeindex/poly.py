"""Sparse multivariate polynomials over Q and monomial orders.

A :class:`Polynomial` maps exponent tuples to nonzero Fractions. Variable
order is fixed by the tuple of names it carries; two polynomials combine only
when their variable tuples are identical.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

Monomial = tuple[int, ...]


class MonomialOrder:
    """A term order given by an integer sort key (larger key = larger monomial).

    ``kind`` is ``"degrevlex"``, ``"lex"`` or ``"block"``; a block order
    compares the first ``split`` variables with ``inner`` and breaks ties on
    the remaining ones with ``inner`` again.
    """

    def __init__(self, kind: str, split: Optional[int] = None, inner: Optional["MonomialOrder"] = None):
        if kind not in ("degrevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and (split is None or inner is None or inner.kind == "block"):
            raise ValueError("block order needs a split index and a degrevlex/lex inner order")
        self.kind = kind
        self.split = split
        self.inner = inner

    def key(self, m: Monomial) -> tuple[int, ...]:
        if self.kind == "degrevlex":
            return (sum(m),) + tuple(-e for e in reversed(m))
        if self.kind == "lex":
            return m
        return self.inner.key(m[: self.split]) + self.inner.key(m[self.split :])

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.split, self.inner) == (other.kind, other.split, other.inner)
        )

    def __hash__(self):
        return hash((self.kind, self.split, self.inner))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', split={self.split}, inner={self.inner!r})"
        return f"MonomialOrder({self.kind!r})"


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")


def order_by_name(name: str) -> MonomialOrder:
    return {"degrevlex": DEGREVLEX, "lex": LEX}[name]


def block_order(inner: MonomialOrder, split: int) -> MonomialOrder:
    """First ``split`` variables dominate the rest; ``inner`` within each block."""
    return MonomialOrder("block", split=split, inner=inner)


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Optional[Mapping[Monomial, object]] = None):
        self.vars = tuple(vars)
        clean: dict[Monomial, Fraction] = {}
        if terms:
            nv = len(self.vars)
            for m, c in terms.items():
                if len(m) != nv:
                    raise ValueError(f"exponent vector {m} does not match {nv} variables")
                c = Fraction(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, vars: tuple[str, ...], terms: dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.vars = vars
        p.terms = terms
        return p

    @classmethod
    def constant(cls, vars: Sequence[str], c) -> "Polynomial":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "Polynomial":
        vars = tuple(vars)
        idx = vars.index(name)
        return cls(vars, {tuple(int(i == idx) for i in range(len(vars))): 1})

    @classmethod
    def monomial(cls, vars: Sequence[str], m: Monomial, c=1) -> "Polynomial":
        return cls(vars, {tuple(m): c})

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def coefficient(self, m: Monomial) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def homogeneous_part(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.vars, {m: c for m, c in self.terms.items() if sum(m) == d})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._raw(self.vars, {})
        return Polynomial._raw(self.vars, {m: v * c for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial._raw(self.vars, {})
        return Polynomial._raw(self.vars, {mono_mul(m, mono): v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.vars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self, order: MonomialOrder = DEGREVLEX) -> list[tuple[Monomial, Fraction]]:
        """Terms from largest to smallest under ``order``."""
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(order))

    def partial(self, i: int) -> "Polynomial":
        if not 0 <= i < self.nvars:
            raise IndexError(f"variable index {i} out of range")
        out = {}
        for m, c in self.terms.items():
            if m[i]:
                out[m[:i] + (m[i] - 1,) + m[i + 1 :]] = c * m[i]
        return Polynomial._raw(self.vars, out)

    def substitute_vars(self, mapping: Mapping[str, str], target: Sequence[str]) -> "Polynomial":
        """Rename variables into the variable tuple ``target``.

        Every variable occurring in ``self`` must be mapped (unmapped names
        default to the same name in ``target``). Distinct sources must go to
        distinct targets.
        """
        target = tuple(target)
        full = {v: mapping.get(v, v) for v in self.vars}
        images = list(full.values())
        if len(set(images)) != len(images):
            raise ValueError("variable mapping is not injective")
        for v, t in full.items():
            if t not in target:
                raise ValueError(f"target variable {t!r} (image of {v!r}) not in {target}")
        idx = [target.index(full[v]) for v in self.vars]
        out = {}
        for m, c in self.terms.items():
            e = [0] * len(target)
            for src, dst in enumerate(idx):
                e[dst] += m[src]
            out[tuple(e)] = c
        return Polynomial._raw(target, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def to_str(self, order: MonomialOrder = DEGREVLEX) -> str:
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms(order)):
            neg = c < 0
            a = -c if neg else c
            mono = format_monomial(m, self.vars)
            if mono == "1":
                body = format_coefficient(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_coefficient(a)}*{mono}"
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.vars}, {self.to_str()!r})"


def divide_by_difference(p: Polynomial, j: int, k: int) -> Polynomial:
    """Exact quotient of ``p`` by ``(x_j - x_k)``, viewing ``p`` as univariate in x_j.

    Raises ArithmeticError when the division leaves a remainder.
    """
    if j == k:
        raise ValueError("x_j - x_j is zero")
    # coefficients of x_j^d, as polynomials without x_j
    coeffs: dict[int, dict[Monomial, Fraction]] = {}
    for m, c in p.terms.items():
        d = m[j]
        rest = m[:j] + (0,) + m[j + 1 :]
        coeffs.setdefault(d, {})[rest] = c
    if not coeffs:
        return p
    top = max(coeffs)
    vars = p.vars
    shift_k = tuple(int(i == k) for i in range(len(vars)))

    def times_xk(q: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
        return {mono_mul(m, shift_k): c for m, c in q.items()}

    def add(a: dict, b: dict) -> dict:
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    # synthetic division by (x_j - x_k): q_{d-1} = c_d + x_k q_d
    quotient: dict[Monomial, Fraction] = {}
    carry: dict[Monomial, Fraction] = {}
    for d in range(top, 0, -1):
        carry = add(coeffs.get(d, {}), times_xk(carry))
        for m, c in carry.items():
            e = list(m)
            e[j] += d - 1
            quotient[tuple(e)] = c
    remainder = add(coeffs.get(0, {}), times_xk(carry))
    if remainder:
        raise ArithmeticError(f"{p} is not divisible by {vars[j]} - {vars[k]}")
    return Polynomial._raw(vars, quotient)


MAX_DET_DIM = 8


def poly_det(
    m: Sequence[Sequence[Polynomial]],
    reduce: Optional[Callable[[Polynomial], Polynomial]] = None,
) -> Polynomial:
    """Determinant of a square polynomial matrix by cofactor expansion.

    Expands along the row or column with the fewest total terms. ``reduce``
    is applied to every partial product, which lets callers work modulo an
    ideal (any ring homomorphism commutes with the expansion).
    """
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    if any(len(row) != n for row in m):
        raise ValueError("poly_det requires a square matrix")
    if n > MAX_DET_DIM:
        raise ValueError(f"poly_det dimension {n} exceeds guard {MAX_DET_DIM}")
    vars = m[0][0].vars
    red = reduce or (lambda p: p)

    def rec(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return red(m[rows[0]][cols[0]])
        row_cost = [(sum(len(m[r][c]) for c in cols), 0, i) for i, r in enumerate(rows)]
        col_cost = [(sum(len(m[r][c]) for r in rows), 1, i) for i, c in enumerate(cols)]
        _, axis, pick = min(row_cost + col_cost)
        total = Polynomial(vars)
        for t in range(len(rows)):
            i, j = (pick, t) if axis == 0 else (t, pick)
            entry = m[rows[i]][cols[j]]
            if entry.is_zero():
                continue
            minor = rec(rows[:i] + rows[i + 1 :], cols[:j] + cols[j + 1 :])
            if minor.is_zero():
                continue
            term = red(entry * minor)
            total = total - term if (i + j) % 2 else total + term
        return total

    return rec(tuple(range(n)), tuple(range(n)))


def from_terms(vars: Sequence[str], items: Iterable[tuple[Monomial, object]]) -> Polynomial:
    out: dict[Monomial, Fraction] = {}
    for m, c in items:
        out[tuple(m)] = out.get(tuple(m), Fraction(0)) + Fraction(c)
    return Polynomial(vars, out)
