"""Command-line front end.

Exit codes: 0 success (including not quasi-homogeneous), 2 bad input (parse
error, origin not a critical point), 3 non-isolated singularity, 4 critical
points away from the origin, 5 catalog expectation mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import builtin_catalog, error_kind, load_catalog, run_catalog
from .groebner import DEFAULT_MAX_DEGREE
from .report import analyze, pairing

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NON_ISOLATED = 3
EXIT_NON_LOCAL = 4
EXIT_MISMATCH = 5

_EXIT_FOR_KIND = {
    "parse": EXIT_INPUT,
    "not-critical": EXIT_INPUT,
    "non-isolated": EXIT_NON_ISOLATED,
    "non-local": EXIT_NON_LOCAL,
}


def _vars(text: str) -> list[str]:
    names = [v.strip() for v in text.split(",") if v.strip()]
    if not names:
        raise argparse.ArgumentTypeError("at least one variable is required")
    if len(set(names)) != len(names):
        raise argparse.ArgumentTypeError(f"duplicate variables in {text!r}")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hodgeindex",
        description="Milnor algebra, residue pairing and Hodge signature of an isolated hypersurface singularity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_poly=True):
        if with_poly:
            p.add_argument("poly", help="polynomial, e.g. 'x^3 + y^3 + z^3'")
            p.add_argument("--vars", required=True, type=_vars, help="comma-separated variable order, e.g. x,y,z")
        p.add_argument("--order", choices=("degrevlex", "lex"), default="degrevlex", help="order for the staircase basis")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE, help="Groebner pair degree guard")

    p = sub.add_parser("analyze", help="full analysis of one germ")
    common(p)
    p.add_argument("--skip-hodge", action="store_true", help="pairing only, no spectrum or signature formula")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (breaks byte-stability)")

    p = sub.add_parser("pairing", help="Gram matrix of the residue pairing and its inertia")
    common(p)

    p = sub.add_parser("catalog", help="run a catalog of germs against their expectations")
    common(p, with_poly=False)
    p.add_argument("--catalog", default="builtin", help="catalog JSON file, or 'builtin'")
    return parser


def _fail(exc: BaseException) -> int:
    kind = error_kind(exc)
    if kind is None:
        raise exc
    print(f"error ({kind}): {exc}", file=sys.stderr)
    return _EXIT_FOR_KIND[kind]


def cmd_analyze(args) -> int:
    try:
        rep = analyze(
            args.poly,
            args.vars,
            order=args.order,
            max_degree=args.max_degree,
            skip_hodge=args.skip_hodge,
            timing=args.timing,
        )
    except Exception as exc:
        return _fail(exc)
    sys.stdout.write(rep.to_json() if args.format == "structured" else rep.to_text())
    return EXIT_OK


def cmd_pairing(args) -> int:
    try:
        rep = pairing(args.poly, args.vars, order=args.order, max_degree=args.max_degree)
    except Exception as exc:
        return _fail(exc)
    sys.stdout.write(rep.to_json() if args.format == "structured" else rep.to_text())
    return EXIT_OK


def cmd_catalog(args) -> int:
    try:
        entries = builtin_catalog() if args.catalog == "builtin" else load_catalog(args.catalog)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error (catalog): {exc}", file=sys.stderr)
        return EXIT_INPUT
    results = run_catalog(entries, order=args.order, max_degree=args.max_degree)
    failed = [r for r in results if not r.passed]
    if args.format == "structured":
        doc = {
            "entries": [
                {
                    "name": r.entry.name,
                    "poly": r.entry.poly,
                    "vars": list(r.entry.vars),
                    "passed": r.passed,
                    "error": r.error,
                    "mismatches": r.mismatches,
                    "mu": None if r.report is None else r.report.mu,
                    "sigma_formula": None if r.report is None else r.report.sigma_formula,
                    "signature_raw": None if r.report is None else r.report.inertia_raw.signature,
                }
                for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        width = max(len(r.entry.name) for r in results) if results else 4
        print(f"{'name':<{width}}  {'mu':>4}  {'sigma':>5}  {'raw':>4}  status")
        for r in results:
            rep = r.report
            mu = "-" if rep is None else str(rep.mu)
            sig = "-" if rep is None or rep.sigma_formula is None else str(rep.sigma_formula)
            raw = "-" if rep is None else str(rep.inertia_raw.signature)
            status = "ok" if r.passed else "FAIL: " + "; ".join(r.mismatches)
            if r.passed and r.error:
                status = f"ok (expected {r.error})"
            print(f"{r.entry.name:<{width}}  {mu:>4}  {sig:>5}  {raw:>4}  {status}")
        print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return {"analyze": cmd_analyze, "pairing": cmd_pairing, "catalog": cmd_catalog}[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
