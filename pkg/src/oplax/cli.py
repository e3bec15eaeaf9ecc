"""Command-line verification driver.

``oplax verify <suite>`` runs a named check suite and prints a report, one
line per check in text mode or the JSON document described in the README.
Exit status: 0 when every executed check passes, 1 when any fails, 2 on a
usage error.  ``oplax compute jacobi`` evaluates the Jacobi operator of one
quantum type on given (or fully symbolic) vectors.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import bianchi, jacobi, oscillator
from .report import VerificationReport
from .weyl import render_factored

VERIFY_SUITES = (
    "all", "matrix-lax", "operadic-lax", "tables",
    "jacobi-classical", "jacobi-quantum", "theorem-9-1",
)


def _suite_matrix_lax(hbar_zero: bool) -> VerificationReport:
    return oscillator.verify_matrix_lax()


def _suite_operadic_lax(hbar_zero: bool, type_name=None) -> VerificationReport:
    report = VerificationReport()
    for name, mu in bianchi.dynamical_table().items():
        if type_name is not None and name != type_name:
            continue
        report.extend(oscillator.verify_operadic_lax(mu, label=name))
    return report


def _suite_tables(hbar_zero: bool) -> VerificationReport:
    return bianchi.check_tables_consistency(hbar_zero=hbar_zero)


def _suite_jacobi_classical(hbar_zero: bool) -> VerificationReport:
    return jacobi.verify_classical_lie_rows()


def _suite_jacobi_quantum(hbar_zero: bool) -> VerificationReport:
    return jacobi.verify_quantum_lie_types(hbar_zero=hbar_zero)


def _suite_theorem(hbar_zero: bool) -> VerificationReport:
    report = jacobi.verify_closed_form(hbar_zero=hbar_zero)
    report.extend(jacobi.verify_closed_form_specializations(hbar_zero=hbar_zero))
    return report


_SUITE_ORDER = (
    ("matrix-lax", _suite_matrix_lax),
    ("operadic-lax", _suite_operadic_lax),
    ("tables", _suite_tables),
    ("jacobi-classical", _suite_jacobi_classical),
    ("jacobi-quantum", _suite_jacobi_quantum),
    ("theorem-9-1", _suite_theorem),
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oplax",
        description="Exact symbolic checks for the oscillator Lax pair, its "
                    "operadic deformations, and their quantum Jacobi operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=VERIFY_SUITES)
    verify.add_argument("--type", dest="type_name", choices=bianchi.TYPE_NAMES,
                        help="restrict the operadic-lax suite to one type")
    verify.add_argument("--format", dest="fmt", choices=("text", "json"),
                        default="text")
    verify.add_argument("--hbar", choices=("symbolic", "0"), default="symbolic",
                        help="keep hbar symbolic or take the classical limit "
                             "of every quantum residual")

    compute = sub.add_parser("compute", help="evaluate an operator")
    compute.add_argument("target", choices=("jacobi",))
    compute.add_argument("--type", dest="type_name", required=True,
                         choices=bianchi.TYPE_NAMES)
    compute.add_argument("--x", dest="vec_x", help="comma-separated rationals")
    compute.add_argument("--y", dest="vec_y", help="comma-separated rationals")
    compute.add_argument("--z", dest="vec_z", help="comma-separated rationals")
    compute.add_argument("--symbolic", action="store_true",
                         help="use fully symbolic vector components")
    compute.add_argument("--format", dest="fmt", choices=("text", "json"),
                         default="text")
    compute.add_argument("--hbar", choices=("symbolic", "0"), default="symbolic")
    return parser


def _parse_vector(text: str, flag: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"{flag} expects three comma-separated rationals")
    try:
        return jacobi.rational_vec(Fraction(part.strip()) for part in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"{flag}: {exc}") from None


def _run_verify(args) -> int:
    if args.type_name is not None and args.suite != "operadic-lax":
        print("--type applies to the operadic-lax suite only", file=sys.stderr)
        return 2
    hbar_zero = args.hbar == "0"
    report = VerificationReport()
    for name, suite in _SUITE_ORDER:
        if args.suite not in ("all", name):
            continue
        if name == "operadic-lax":
            report.extend(_suite_operadic_lax(hbar_zero, args.type_name))
        else:
            report.extend(suite(hbar_zero))
    rendered = report.render_json() if args.fmt == "json" else report.render_text()
    sys.stdout.write(rendered)
    return 0 if report.all_passed else 1


def _run_compute(args) -> int:
    if args.symbolic:
        vectors = (jacobi.symbolic_vec("x"), jacobi.symbolic_vec("y"),
                   jacobi.symbolic_vec("z"))
    else:
        missing = [flag for flag, value in
                   (("--x", args.vec_x), ("--y", args.vec_y), ("--z", args.vec_z))
                   if value is None]
        if missing:
            print(f"missing {', '.join(missing)} (or pass --symbolic)",
                  file=sys.stderr)
            return 2
        try:
            vectors = (_parse_vector(args.vec_x, "--x"),
                       _parse_vector(args.vec_y, "--y"),
                       _parse_vector(args.vec_z, "--z"))
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
    mu = bianchi.quantum_table()[args.type_name]
    result = jacobi.jacobi_op(*vectors, mu)
    if args.hbar == "0":
        result = result.subst_params({"hbar": 0})
    if args.fmt == "json":
        import json

        doc = {f"J{i}": c.render() for i, c in enumerate(result, start=1)}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for i, component in enumerate(result, start=1):
            sys.stdout.write(f"J{i} = {render_factored(component)}\n")
    return 0


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    if args.command == "verify":
        return _run_verify(args)
    return _run_compute(args)


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
