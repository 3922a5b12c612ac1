"""Example catalog: built-in germs and the JSON catalog file format.

A catalog file is a JSON list of objects::

    [
      {"name": "A2 surface", "poly": "x^3 + y^2 + z^2", "vars": ["x", "y", "z"],
       "expected_mu": 2, "expected_sigma": -2, "expected_weights": ["1/3", "1/2", "1/2"]},
      {"name": "cross", "poly": "x^2*y^2", "vars": ["x", "y"], "expected_error": "non-isolated"}
    ]

``name``, ``poly`` and ``vars`` are required; every ``expected_*`` key is
optional. ``expected_error`` is one of ``parse``, ``not-critical``,
``non-isolated`` or ``non-local``.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from pathlib import Path
from typing import Optional, Sequence

from .groebner import GroebnerBudgetError
from .milnor import NonIsolatedError, NonLocalError, NotCriticalError
from .parse import ParseError, parse
from .report import AnalysisReport, analyze

ERROR_KINDS = ("parse", "not-critical", "non-isolated", "non-local")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    poly: str
    vars: tuple[str, ...]
    expected_mu: Optional[int] = None
    expected_sigma: Optional[int] = None
    expected_weights: Optional[tuple[Fraction, ...]] = None
    expected_error: Optional[str] = None

    def __post_init__(self):
        if self.expected_error is not None and self.expected_error not in ERROR_KINDS:
            raise ValueError(f"{self.name}: unknown expected_error {self.expected_error!r}")
        if self.expected_error != "parse":
            parse(self.poly, self.vars)

    @classmethod
    def from_dict(cls, d: dict) -> "CatalogEntry":
        unknown = set(d) - {"name", "poly", "vars", "expected_mu", "expected_sigma", "expected_weights", "expected_error"}
        if unknown:
            raise ValueError(f"unknown catalog keys: {sorted(unknown)}")
        w = d.get("expected_weights")
        return cls(
            name=d["name"],
            poly=d["poly"],
            vars=tuple(d["vars"]),
            expected_mu=d.get("expected_mu"),
            expected_sigma=d.get("expected_sigma"),
            expected_weights=None if w is None else tuple(Fraction(x) for x in w),
            expected_error=d.get("expected_error"),
        )

    def to_dict(self) -> dict:
        d = {"name": self.name, "poly": self.poly, "vars": list(self.vars)}
        if self.expected_mu is not None:
            d["expected_mu"] = self.expected_mu
        if self.expected_sigma is not None:
            d["expected_sigma"] = self.expected_sigma
        if self.expected_weights is not None:
            d["expected_weights"] = [str(w) for w in self.expected_weights]
        if self.expected_error is not None:
            d["expected_error"] = self.expected_error
        return d


def load_catalog(path: str | Path) -> list[CatalogEntry]:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise ValueError("catalog file must hold a JSON list of entries")
    return [CatalogEntry.from_dict(d) for d in data]


XYZ = ("x", "y", "z")


def _surface_a(k: int) -> CatalogEntry:
    return CatalogEntry(
        f"A{k} surface",
        f"x^{k + 1} + y^2 + z^2",
        XYZ,
        expected_mu=k,
        expected_sigma=-k,
        expected_weights=(Fraction(1, k + 1), Fraction(1, 2), Fraction(1, 2)),
    )


def brieskorn_pham(exponents: Sequence[int]) -> CatalogEntry:
    names = XYZ[: len(exponents)] if len(exponents) <= 3 else tuple(f"x{i}" for i in range(len(exponents)))
    text = " + ".join(f"{v}^{a}" for v, a in zip(names, exponents))
    return CatalogEntry(
        "BP(" + ",".join(map(str, exponents)) + ")",
        text,
        names,
        expected_mu=prod(a - 1 for a in exponents),
        expected_weights=tuple(Fraction(1, a) for a in exponents),
    )


def builtin_catalog() -> list[CatalogEntry]:
    entries = [_surface_a(k) for k in range(1, 7)]
    entries += [
        CatalogEntry(
            "D4 surface", "x^3 + x*y^2 + z^2", XYZ, 4, -4, (Fraction(1, 3), Fraction(1, 3), Fraction(1, 2))
        ),
        CatalogEntry("E6~ simple elliptic", "x^3 + y^3 + z^3", XYZ, 8, -6, (Fraction(1, 3),) * 3),
        CatalogEntry("A2 curve", "x^3 + y^2", ("x", "y"), 2, 0, (Fraction(1, 3), Fraction(1, 2))),
        CatalogEntry("D4 curve", "x^3 + y^3", ("x", "y"), 4, 0, (Fraction(1, 3), Fraction(1, 3))),
        CatalogEntry("E6 curve", "x^4 + y^3", ("x", "y"), 6, 0, (Fraction(1, 4), Fraction(1, 3))),
        CatalogEntry("A1 curve", "x^2 + y^2", ("x", "y"), 1, 0, (Fraction(1, 2), Fraction(1, 2))),
        # one monomial cannot pin down two weights
        CatalogEntry("A1 curve, xy form", "x*y", ("x", "y"), expected_mu=1),
        # E8 in the coordinates u = x + y^2: isolated, only critical point at 0, not quasi-homogeneous
        CatalogEntry("E8 surface, sheared", "(x + y^2)^3 + y^5 + z^2", XYZ, expected_mu=8),
        CatalogEntry("crossing lines squared", "x^2*y^2", ("x", "y"), expected_error="non-isolated"),
        CatalogEntry("three critical points", "x^2*(x - 1)^2", ("x",), expected_error="non-local"),
    ]
    for nv in (1, 2, 3):
        for exps in itertools.combinations_with_replacement(range(2, 6), nv):
            entries.append(brieskorn_pham(exps))
    return entries


def error_kind(exc: BaseException) -> Optional[str]:
    if isinstance(exc, ParseError):
        return "parse"
    if isinstance(exc, NotCriticalError):
        return "not-critical"
    if isinstance(exc, (NonIsolatedError, GroebnerBudgetError)):
        return "non-isolated"
    if isinstance(exc, NonLocalError):
        return "non-local"
    return None


@dataclass
class EntryResult:
    entry: CatalogEntry
    report: Optional[AnalysisReport]
    error: Optional[str]
    mismatches: list[str]

    @property
    def passed(self) -> bool:
        return not self.mismatches


def check_entry(entry: CatalogEntry, order: str = "degrevlex", max_degree: int = 60) -> EntryResult:
    try:
        rep = analyze(entry.poly, entry.vars, order=order, max_degree=max_degree)
    except Exception as exc:
        kind = error_kind(exc) or "error"
        if entry.expected_error == kind:
            return EntryResult(entry, None, kind, [])
        return EntryResult(entry, None, kind, [f"unexpected error ({kind}): {exc}"])
    mism = []
    if entry.expected_error is not None:
        mism.append(f"expected error {entry.expected_error}, analysis succeeded")
    if entry.expected_mu is not None and rep.mu != entry.expected_mu:
        mism.append(f"mu {rep.mu} != expected {entry.expected_mu}")
    if entry.expected_weights is not None and (rep.weights is None or tuple(rep.weights) != entry.expected_weights):
        got = "none" if rep.weights is None else ",".join(str(w) for w in rep.weights)
        mism.append(f"weights {got} != expected {','.join(str(w) for w in entry.expected_weights)}")
    if entry.expected_sigma is not None and rep.sigma_formula != entry.expected_sigma:
        mism.append(f"sigma {rep.sigma_formula} != expected {entry.expected_sigma}")
    return EntryResult(entry, rep, None, mism)


def run_catalog(entries: Sequence[CatalogEntry], order: str = "degrevlex", max_degree: int = 60) -> list[EntryResult]:
    return [check_entry(e, order, max_degree) for e in entries]
