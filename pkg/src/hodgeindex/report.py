"""Analysis pipeline and its report, in text and structured (JSON) form.

Structured output rules: rationals are "p/q" strings (integers as "k"),
matrices are row-major lists of such strings, and keys appear in a fixed
order so identical input yields byte-identical documents. The schema is
described in docs/report_schema.md.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional, Sequence

from . import exactlin
from .exactlin import Inertia
from .groebner import DEFAULT_MAX_DEGREE
from .hodge import compare, hodge_numbers, spectrum
from .milnor import NotQuasiHomogeneousError, analyze_milnor, detect_weights, hessian
from .parse import parse
from .poly import format_coefficient, format_monomial, order_by_name
from .residue import residue_pairing

NOT_QH_NOTICE = "spectrum method unavailable: not quasi-homogeneous"


def q(x: Fraction) -> str:
    return format_coefficient(Fraction(x))


def unq(s: str) -> Fraction:
    return Fraction(s)


def _inertia_dict(i: Optional[Inertia]) -> Optional[dict]:
    if i is None:
        return None
    return {"positive": i.positive, "negative": i.negative, "zero": i.zero, "signature": i.signature}


def _inertia_from(d: Optional[dict]) -> Optional[Inertia]:
    if d is None:
        return None
    return Inertia(d["positive"], d["negative"], d["zero"])


@dataclass(frozen=True)
class SpectrumRow:
    monomial: str
    l: Fraction
    eigenvalue_frac: Fraction
    p: int
    q: int
    weight: int
    unipotent: bool


@dataclass
class AnalysisReport:
    polynomial: str
    normalized: str
    variables: list[str]
    order: str
    n: int
    mu: int
    basis: list[str]
    hessian_class: str
    residue_of_hessian: Fraction
    gram: list[list[Fraction]]
    residue_on_basis: list[Fraction]
    det_gram: Fraction
    inertia_raw: Inertia
    quasi_homogeneous: Optional[bool] = None
    notice: Optional[str] = None
    weights: Optional[list[Fraction]] = None
    spectrum: Optional[list[SpectrumRow]] = None
    hodge_diamond: Optional[dict[str, dict[tuple[int, int], int]]] = None
    sigma_formula: Optional[int] = None
    parity_counts: Optional[tuple[int, int, int]] = None
    inertia_twisted: Optional[Inertia] = None
    twist: Optional[list[int]] = None
    twist_symmetric: Optional[bool] = None
    block_law: Optional[bool] = None
    blocks_invertible: Optional[bool] = None
    graded_nondegenerate: Optional[dict[int, bool]] = None
    agreement: Optional[dict[str, Optional[bool]]] = None
    timing: Optional[dict[str, float]] = None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "polynomial": self.polynomial,
            "normalized": self.normalized,
            "variables": list(self.variables),
            "order": self.order,
            "n": self.n,
            "mu": self.mu,
            "basis": list(self.basis),
            "hessian_class": self.hessian_class,
            "residue_of_hessian": q(self.residue_of_hessian),
            "gram": [[q(v) for v in row] for row in self.gram],
            "residue_on_basis": [q(v) for v in self.residue_on_basis],
            "det_gram": q(self.det_gram),
            "inertia_raw": _inertia_dict(self.inertia_raw),
            "quasi_homogeneous": self.quasi_homogeneous,
            "notice": self.notice,
            "weights": None if self.weights is None else [q(w) for w in self.weights],
            "spectrum": None
            if self.spectrum is None
            else [
                {
                    "monomial": r.monomial,
                    "l": q(r.l),
                    "eigenvalue_frac": q(r.eigenvalue_frac),
                    "p": r.p,
                    "q": r.q,
                    "weight": r.weight,
                    "unipotent": r.unipotent,
                }
                for r in self.spectrum
            ],
            "hodge_diamond": None
            if self.hodge_diamond is None
            else {
                part: [{"p": p, "q": qq, "count": c} for (p, qq), c in sorted(counts.items())]
                for part, counts in self.hodge_diamond.items()
            },
            "sigma_formula": self.sigma_formula,
            "parity_counts": None
            if self.parity_counts is None
            else dict(zip(("plus", "integer", "minus"), self.parity_counts)),
            "inertia_twisted": _inertia_dict(self.inertia_twisted),
            "twist": None if self.twist is None else list(self.twist),
            "twist_symmetric": self.twist_symmetric,
            "block_law": self.block_law,
            "blocks_invertible": self.blocks_invertible,
            "graded_nondegenerate": None
            if self.graded_nondegenerate is None
            else {str(k): v for k, v in sorted(self.graded_nondegenerate.items())},
            "agreement": None if self.agreement is None else dict(self.agreement),
        }
        if self.timing is not None:
            d["timing"] = {k: round(v, 6) for k, v in self.timing.items()}
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "AnalysisReport":
        def opt(key, fn):
            v = d.get(key)
            return None if v is None else fn(v)

        return cls(
            polynomial=d["polynomial"],
            normalized=d["normalized"],
            variables=list(d["variables"]),
            order=d["order"],
            n=d["n"],
            mu=d["mu"],
            basis=list(d["basis"]),
            hessian_class=d["hessian_class"],
            residue_of_hessian=unq(d["residue_of_hessian"]),
            gram=[[unq(v) for v in row] for row in d["gram"]],
            residue_on_basis=[unq(v) for v in d["residue_on_basis"]],
            det_gram=unq(d["det_gram"]),
            inertia_raw=_inertia_from(d["inertia_raw"]),
            quasi_homogeneous=d.get("quasi_homogeneous"),
            notice=d.get("notice"),
            weights=opt("weights", lambda ws: [unq(w) for w in ws]),
            spectrum=opt(
                "spectrum",
                lambda rows: [
                    SpectrumRow(
                        r["monomial"], unq(r["l"]), unq(r["eigenvalue_frac"]), r["p"], r["q"], r["weight"], r["unipotent"]
                    )
                    for r in rows
                ],
            ),
            hodge_diamond=opt(
                "hodge_diamond",
                lambda hd: {part: {(e["p"], e["q"]): e["count"] for e in entries} for part, entries in hd.items()},
            ),
            sigma_formula=d.get("sigma_formula"),
            parity_counts=opt("parity_counts", lambda pc: (pc["plus"], pc["integer"], pc["minus"])),
            inertia_twisted=_inertia_from(d.get("inertia_twisted")),
            twist=opt("twist", list),
            twist_symmetric=d.get("twist_symmetric"),
            block_law=d.get("block_law"),
            blocks_invertible=d.get("blocks_invertible"),
            graded_nondegenerate=opt("graded_nondegenerate", lambda g: {int(k): v for k, v in g.items()}),
            agreement=opt("agreement", dict),
            timing=opt("timing", dict),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"f = {self.normalized}",
            f"variables: {', '.join(self.variables)}  (n = {self.n}, order {self.order})",
            f"Milnor number mu = {self.mu}",
            f"basis: {', '.join(self.basis)}",
            f"Hessian class: {self.hessian_class}   res(Hess f) = {q(self.residue_of_hessian)}",
            "residues on basis: " + ", ".join(q(v) for v in self.residue_on_basis),
            "Gram matrix of the residue pairing:",
        ]
        lines += _format_matrix(self.gram)
        lines.append(f"det = {q(self.det_gram)}   raw inertia {self.inertia_raw}  signature {self.inertia_raw.signature}")
        if self.notice:
            lines.append(self.notice)
        if self.weights is not None:
            lines.append("weights: " + ", ".join(q(w) for w in self.weights))
            lines.append("spectrum:")
            lines.append(f"  {'monomial':<14}{'l':>8}{'l mod 1':>9}{'p':>4}{'q':>4}{'wt':>4}")
            for r in self.spectrum or []:
                lines.append(f"  {r.monomial:<14}{q(r.l):>8}{q(r.eigenvalue_frac):>9}{r.p:>4}{r.q:>4}{r.weight:>4}")
            for part, label in (("h1", "eigenvalue 1"), ("hne1", "eigenvalue != 1")):
                counts = (self.hodge_diamond or {}).get(part, {})
                body = ", ".join(f"h^{{{p},{qq}}}={c}" for (p, qq), c in sorted(counts.items())) or "none"
                lines.append(f"Hodge numbers ({label}): {body}")
            plus, integer, minus = self.parity_counts
            lines.append(f"sigma (Hodge formula) = {self.sigma_formula}   parity counts (+{plus}, int {integer}, -{minus})")
            if self.inertia_twisted is not None:
                lines.append(f"twisted inertia {self.inertia_twisted}  signature {self.inertia_twisted.signature}")
            else:
                lines.append("twisted form is not symmetric; no twisted inertia")
            lines.append(f"block law: {self.block_law}   blocks invertible: {self.blocks_invertible}")
            lines.append("agreement: " + ", ".join(f"{k}={v}" for k, v in (self.agreement or {}).items()))
        if self.timing:
            lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in self.timing.items()))
        return "\n".join(lines) + "\n"


def _format_matrix(m: Sequence[Sequence[Fraction]]) -> list[str]:
    cells = [[q(v) for v in row] for row in m]
    width = max((len(c) for row in cells for c in row), default=1)
    return ["  [" + " ".join(c.rjust(width) for c in row) + "]" for row in cells]


@dataclass
class PairingReport:
    polynomial: str
    variables: list[str]
    order: str
    mu: int
    basis: list[str]
    gram: list[list[Fraction]]
    residue_on_basis: list[Fraction]
    det_gram: Fraction
    inertia_raw: Inertia

    def to_dict(self) -> dict[str, Any]:
        return {
            "polynomial": self.polynomial,
            "variables": list(self.variables),
            "order": self.order,
            "mu": self.mu,
            "basis": list(self.basis),
            "gram": [[q(v) for v in row] for row in self.gram],
            "residue_on_basis": [q(v) for v in self.residue_on_basis],
            "det_gram": q(self.det_gram),
            "inertia_raw": _inertia_dict(self.inertia_raw),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"mu = {self.mu}", f"basis: {', '.join(self.basis)}", "Gram matrix:"]
        lines += _format_matrix(self.gram)
        lines.append("residues on basis: " + ", ".join(q(v) for v in self.residue_on_basis))
        lines.append(f"det = {q(self.det_gram)}   inertia {self.inertia_raw}  signature {self.inertia_raw.signature}")
        return "\n".join(lines) + "\n"


def analyze(
    text: str,
    variables: Sequence[str],
    order: str = "degrevlex",
    max_degree: int = DEFAULT_MAX_DEGREE,
    skip_hodge: bool = False,
    timing: bool = False,
) -> AnalysisReport:
    """Run parse -> Milnor algebra -> residue pairing -> Hodge comparison."""
    clock = {}
    t0 = time.perf_counter()
    f = parse(text, variables)
    md = analyze_milnor(f, order_by_name(order), max_degree=max_degree)
    clock["milnor"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    rp = residue_pairing(md)
    gram = rp.gram_rows()
    clock["residue"] = time.perf_counter() - t0
    names = md.vars
    rep = AnalysisReport(
        polynomial=text,
        normalized=f.to_str(),
        variables=list(names),
        order=order,
        n=md.n,
        mu=md.mu,
        basis=[format_monomial(m, names) for m in md.basis.monomials],
        hessian_class=md.hessian_class.to_str(md.order),
        residue_of_hessian=rp.residue(hessian(f)),
        gram=gram,
        residue_on_basis=list(rp.residue_on_basis),
        det_gram=exactlin.det(gram),
        inertia_raw=exactlin.inertia_ldlt(gram),
    )
    if not skip_hodge:
        t0 = time.perf_counter()
        try:
            ws = detect_weights(f)
        except NotQuasiHomogeneousError:
            rep.quasi_homogeneous = False
            rep.notice = NOT_QH_NOTICE
        else:
            spec = spectrum(md, ws)
            hd = hodge_numbers(spec, md.n)
            sr = compare(md, ws, rp)
            rep.quasi_homogeneous = True
            rep.weights = list(ws.weights)
            rep.spectrum = [
                SpectrumRow(format_monomial(d.monomial, names), d.l, d.eigenvalue_frac, d.p, d.q, d.weight, d.unipotent)
                for d in spec
            ]
            rep.hodge_diamond = {"h1": dict(hd.h1), "hne1": dict(hd.hne1)}
            rep.sigma_formula = sr.sigma_formula
            rep.parity_counts = sr.parity_counts
            rep.inertia_twisted = sr.inertia_twisted
            rep.twist = list(sr.twist)
            rep.twist_symmetric = sr.twist_symmetric
            rep.block_law = sr.block_law
            rep.blocks_invertible = sr.blocks_invertible
            rep.graded_nondegenerate = dict(sr.graded_nondegenerate)
            rep.agreement = dict(sr.agreement)
        clock["hodge"] = time.perf_counter() - t0
    if timing:
        rep.timing = clock
    return rep


def pairing(
    text: str,
    variables: Sequence[str],
    order: str = "degrevlex",
    max_degree: int = DEFAULT_MAX_DEGREE,
) -> PairingReport:
    f = parse(text, variables)
    md = analyze_milnor(f, order_by_name(order), max_degree=max_degree)
    rp = residue_pairing(md)
    gram = rp.gram_rows()
    return PairingReport(
        polynomial=text,
        variables=list(md.vars),
        order=order,
        mu=md.mu,
        basis=[format_monomial(m, md.vars) for m in md.basis.monomials],
        gram=gram,
        residue_on_basis=list(rp.residue_on_basis),
        det_gram=exactlin.det(gram),
        inertia_raw=exactlin.inertia_ldlt(gram),
    )
