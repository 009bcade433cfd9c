"""Command-line interface.

Exit codes: 0 for an affirmative result, 1 for a negative or failed result
(not confluent, inconsistent table, a verdict other than a fully verified
Smooth), 2 for input errors (unknown command, unreadable file, grammar or
admissibility problems).
"""

from __future__ import annotations

import argparse
import sys

from .calculus import differential, shift_ansatz, verify_automorphisms
from .classify import decompose, identify_family
from .engine import is_pbw, normal_form
from .exprs import ExpressionError, format_poly, parse_poly
from .presentation import PresentationError, load_presentation, validate_presentation
from .scalars import format_rational
from .smoothness import decide_smoothness, verify_witness
from .templates import generate_templates, render_template

__all__ = ["main"]


class _CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        P = load_presentation(path)
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except PresentationError as exc:
        raise _CliError(f"{path}: {exc}") from exc
    problems = validate_presentation(P)
    if problems:
        raise _CliError(f"{path}: " + "; ".join(problems))
    return P


def _parse_expr(text: str, n: int):
    try:
        return parse_poly(text, n)
    except ExpressionError as exc:
        raise _CliError(f"bad expression: {exc}") from exc


def _fmt_indices(indices) -> str:
    return " ".join(map(str, indices)) if indices else "-"


def _fmt_components(comps) -> str:
    if not comps:
        return "-"
    return " ".join("{" + ",".join(map(str, c)) + "}" for c in comps)


def format_form(coeffs: dict) -> str:
    parts = []
    for J in sorted(coeffs):
        basis = "^".join(f"dD{a}" for a in J)
        parts.append(f"{basis} * ({format_poly(coeffs[J])})")
    return " + ".join(parts) if parts else "0"


def _cmd_check_pbw(args) -> int:
    P = _load(args.file)
    report = is_pbw(P)
    if report.pbw:
        print("pbw: true")
        return 0
    a, b, c = report.first_failure
    print("pbw: false")
    print(f"triple: {a} {b} {c}")
    return 1


def _cmd_classify(args) -> int:
    P = _load(args.file)
    dec = decompose(P)
    fam = identify_family(P, dec)
    print(f"n: {P.n}")
    print(f"I: {_fmt_indices(dec.I)}")
    print(f"R: {_fmt_indices(dec.R)}")
    print(f"components: {_fmt_components(dec.R_components)}")
    print(f"S: {_fmt_indices(dec.S)}")
    print(f"Tcirc: {_fmt_components(dec.T_circ)}")
    print(f"Tbullet: {_fmt_components(dec.T_bullet)}")
    print(f"family: {fam.family}")
    for name, value in fam.params.items():
        print(f"param {name}: {format_rational(value)}")
    for violation in fam.violations:
        print(f"violation: {violation}")
    return 0 if fam.consistent else 1


_VERDICT_LINE = {"Smooth": "SMOOTH", "NotSmooth": "NOT-SMOOTH",
                 "Undetermined": "UNDETERMINED"}


def _smoothness_report(args) -> int:
    P = _load(args.file)
    report = is_pbw(P)
    if not report.pbw:
        a, b, c = report.first_failure
        print("pbw: false")
        print(f"triple: {a} {b} {c}")
        return 1
    dec = decompose(P)
    fam = identify_family(P, dec)
    verdict = decide_smoothness(P, dec, fam)
    print(f"verdict: {_VERDICT_LINE[verdict.verdict]}")
    print(f"case: {verdict.theorem_case or '-'}")
    print(f"family: {fam.family}")
    print(f"I: {_fmt_indices(dec.I)}")
    print(f"S: {_fmt_indices(dec.S)}")
    print(f"T: {_fmt_indices(dec.T)}")
    print(f"gkdim: {P.n}")
    if verdict.obstruction is not None:
        ob = verdict.obstruction
        print(f"obstruction: i={ob.i} t={ob.t}")
        print(f"residual: {format_poly(ob.residual)}")
    for note in verdict.notes:
        print(f"note: {note}")
    if verdict.verdict == "NotSmooth":
        ansatz_ok = verify_automorphisms(shift_ansatz(P, dec, fam), P)
        state = "PASS" if ansatz_ok.relations_preserved else "FAIL"
        print(f"check:ansatz-relations: {state}")
        return 1
    if verdict.verdict == "Undetermined":
        return 1
    witness_report = verify_witness(P, verdict, degree_bound=args.degree_bound)
    for name, passed in witness_report.checks:
        print(f"check:{name}: {'PASS' if passed else 'FAIL'}")
    return 0 if witness_report.ok else 1


def _cmd_reduce(args) -> int:
    P = _load(args.file)
    comb = _parse_expr(args.expr, P.n)
    print(format_poly(normal_form(comb, P)))
    return 0


def _cmd_d(args) -> int:
    P = _load(args.file)
    comb = _parse_expr(args.expr, P.n)
    report = is_pbw(P)
    if not report.pbw:
        a, b, c = report.first_failure
        print("pbw: false")
        print(f"triple: {a} {b} {c}")
        return 1
    verdict = decide_smoothness(P)
    if verdict.witness is None:
        print(f"verdict: {_VERDICT_LINE[verdict.verdict]}")
        for note in verdict.notes:
            print(f"note: {note}")
        return 1
    form = differential(normal_form(comb, P), verdict.witness, P)
    print(f"d: {format_form(form.coeffs)}")
    return 0


def _cmd_tables(args) -> int:
    try:
        rows = generate_templates(args.n, args.mode)
    except ValueError as exc:
        raise _CliError(str(exc)) from exc
    print(f"n: {args.n}")
    print(f"mode: {args.mode}")
    print(f"count: {len(rows)}")
    for index, skel in enumerate(rows, start=1):
        print()
        print(render_template(skel, index))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diffalg",
        description="Ordered-basis checks, classification, and verified "
                    "differential calculi for inhomogeneous quadratic "
                    "exchange algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-pbw", help="test rewriting confluence on all triples")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check_pbw)

    p = sub.add_parser("classify", help="decompose the index set and identify the family")
    p.add_argument("file")
    p.set_defaults(func=_cmd_classify)

    for name, help_text in (
            ("smooth", "decide differential smoothness and verify the witness"),
            ("verify-calculus", "run every calculus check on the derived witness")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file")
        p.add_argument("--degree-bound", type=int, default=None,
                       help="degree cap for the volume-form identities")
        p.set_defaults(func=_smoothness_report)

    p = sub.add_parser("reduce", help="normal form of a polynomial expression")
    p.add_argument("file")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("d", help="differential of a polynomial expression")
    p.add_argument("file")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_d)

    p = sub.add_parser("tables", help="enumerate relation templates")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("paper", "full"), default="paper")
    p.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
