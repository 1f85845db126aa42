"""Command-line front end: ``hbarlpt {osc,coulomb,debye-table,verify,solve-num}``.

Exit codes: 0 success, 1 validation error, 2 verification failure,
3 oracle non-convergence.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import numeric
from .coulomb import CoulombPotential, DebyeSpec, NoBoundStateError, coulomb_series, debye_taylor
from .exact import parse_rational, parse_rational_list, render_decimal
from .oscillator import OscillatorPotential, oscillator_series
from .tables import QuantumNumbers
from .verification import DEFAULT_GRID, cross_check_closed_forms, verify_table

EXIT_OK, EXIT_INVALID, EXIT_VERIFY, EXIT_ORACLE = 0, 1, 2, 3
TABLE_ORDERS = (0, 1, 2, 3, 4, 5, 10, 15, 20, 25)
DEFAULT_OSC_F = "1,1,1,1"
DEFAULT_COULOMB_V = "-1,1/7,-1/11,1/13,-1/17,1/19"


class ValidationError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _rational_list(text: str) -> list[Fraction]:
    try:
        return parse_rational_list(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _common(p: argparse.ArgumentParser, K_default: int, digits: int = 10, sign: str = "energy"):
    p.add_argument("--m", type=_rational, default=Fraction(1), help="mass (default 1)")
    p.add_argument("--omega", type=_rational, help="oscillator frequency")
    p.add_argument("--f", type=_rational_list, help="anharmonic couplings f_1,f_2,...")
    p.add_argument("--alpha", type=_rational, help="Debye coupling")
    p.add_argument("--kappa", type=_rational, help="Debye screening parameter")
    p.add_argument("--V", type=_rational_list, help="Taylor data V_0,V_1,... (use --V=-1,...)")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("-K", "--order", type=int, default=K_default, dest="K")
    p.add_argument("--digits", type=int, default=digits)
    p.add_argument("--format", choices=("pretty", "csv", "json"), default="pretty")
    p.add_argument("--sign", choices=("energy", "binding"), default=sign,
                   help="report E (energy) or -E (binding)")
    p.add_argument("--hbar", type=_rational, default=Fraction(1))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hbarlpt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("osc", help="anharmonic oscillator energy series")
    _common(p, 5)
    p.add_argument("--oracle", action="store_true", help="append the Numerov eigenvalue")

    p = sub.add_parser("coulomb", help="screened Coulomb energy series (--V or --alpha/--kappa)")
    _common(p, 5)
    p.add_argument("--oracle", action="store_true", help="append the Numerov eigenvalue (Debye only)")

    p = sub.add_parser("debye-table", help="partial sums of -E for the Debye potential")
    _common(p, 25, sign="binding")
    p.add_argument("--no-oracle", action="store_true")

    p = sub.add_parser("verify", help="residual, residue and closed-form checks")
    _common(p, 10)
    p.add_argument("--family", choices=("oscillator", "coulomb", "debye"), default="oscillator")
    p.add_argument("--corrupt", action="store_true",
                   help="self-test: perturb one table entry by 1 before checking")

    p = sub.add_parser("solve-num", help="Numerov eigenvalue only")
    _common(p, 0)
    p.add_argument("--family", choices=("oscillator", "coulomb", "debye"), default="debye")
    p.add_argument("--mesh-points", type=int, default=200_000)
    return parser


# -- job construction ---------------------------------------------------------

def _qn(args) -> QuantumNumbers:
    try:
        return QuantumNumbers(args.n, args.l)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _oscillator(args, default_f: str | None = None) -> OscillatorPotential:
    if args.omega is None:
        raise ValidationError("--omega is required for the oscillator")
    f = args.f if args.f is not None else parse_rational_list(default_f or "")
    try:
        return OscillatorPotential(args.m, args.omega, f)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _debye_spec(args) -> DebyeSpec:
    alpha = args.alpha if args.alpha is not None else Fraction(1)
    kappa = args.kappa if args.kappa is not None else Fraction(0)
    try:
        return DebyeSpec(alpha, kappa, args.m)
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _coulomb(args, K: int, default_V: str | None = None) -> CoulombPotential:
    try:
        if args.V is not None:
            return CoulombPotential(args.m, args.V)
        if args.alpha is not None or args.kappa is not None or default_V is None:
            return debye_taylor(_debye_spec(args), K + 1)
        return CoulombPotential(args.m, parse_rational_list(default_V))
    except ValueError as exc:
        raise ValidationError(str(exc)) from None


def _check_order(K: int, k_min: int) -> None:
    if K < k_min:
        raise ValidationError(f"-K must be >= {k_min}")


def _signed(value, sign: str):
    return -value if sign == "binding" else value


# -- rendering ----------------------------------------------------------------

def _fraction_record(value: Fraction, digits: int) -> dict:
    return {
        "numerator": value.numerator,
        "denominator": value.denominator,
        "decimal": render_decimal(value, digits),
    }


def _render(job: dict, fmt: str, digits: int) -> str:
    corrections = [
        {"k": k, **_fraction_record(v, digits)} for k, v in job["corrections"]
    ]
    partial = [{"K": K, **_fraction_record(v, digits)} for K, v in job["partial_sums"]]
    oracle = job.get("oracle")

    if fmt == "json":
        doc = {
            "family": job["family"],
            "n": job["n"],
            "l": job["l"],
            "K": job["K"],
            "sign": job["sign"],
            "hbar": str(job["hbar"]),
            "corrections": corrections,
            "partial_sums": partial,
        }
        if oracle is not None:
            doc["oracle"] = {"value": oracle, "decimal": f"{oracle:.{digits}f}"}
        return json.dumps(doc, indent=2, ensure_ascii=False)

    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["kind", "order", "numerator", "denominator", "decimal"])
        for c in corrections:
            w.writerow(["correction", c["k"], c["numerator"], c["denominator"], c["decimal"]])
        for p in partial:
            w.writerow(["partial_sum", p["K"], p["numerator"], p["denominator"], p["decimal"]])
        if oracle is not None:
            w.writerow(["oracle", "", "", "", f"{oracle:.{digits}f}"])
        return buf.getvalue().rstrip("\n")

    label = "-E" if job["sign"] == "binding" else "E"
    lines = [f"{job['title']}  n={job['n']} l={job['l']} K={job['K']}  ({label}, hbar={job['hbar']})"]
    if corrections:
        lines.append(f"{'k':>3}  {'correction':<28} decimal")
        for c in corrections:
            frac = f"{c['numerator']}/{c['denominator']}" if c["denominator"] != 1 else str(c["numerator"])
            lines.append(f"{c['k']:>3}  {frac:<28} {c['decimal']}")
    lines.append(f"{'K':>3}  partial sum")
    for p in partial:
        lines.append(f"{p['K']:>3}  {p['decimal']}")
    if oracle is not None:
        lines.append(f"E_num {oracle:.{digits}f}")
    return "\n".join(lines)


def _solve_oracle(problem) -> float:
    return numeric.solve_eigenvalue(problem)


# -- commands -----------------------------------------------------------------

def cmd_osc(args) -> str:
    _check_order(args.K, 1)
    pot, qn = _oscillator(args), _qn(args)
    series, _ = oscillator_series(pot, qn, args.K)
    job = {
        "title": f"oscillator m={pot.m} omega={pot.omega} f={[str(x) for x in pot.f]}",
        "family": "oscillator", "n": qn.n, "l": qn.l, "K": args.K,
        "sign": args.sign, "hbar": args.hbar,
        "corrections": [(k, _signed(series[k], args.sign)) for k in series.orders()],
        "partial_sums": [(K, _signed(series.partial_sum(K, args.hbar), args.sign)) for K in series.orders()],
    }
    if args.oracle:
        problem = numeric.oscillator_problem(
            float(pot.omega), [float(x) for x in pot.f], qn.n, qn.l, float(pot.m)
        )
        job["oracle"] = _signed(_solve_oracle(problem), args.sign)
    return _render(job, args.format, args.digits)


def cmd_coulomb(args) -> str:
    _check_order(args.K, 0)
    pot, qn = _coulomb(args, args.K), _qn(args)
    series, _ = coulomb_series(pot, qn, args.K)
    job = {
        "title": f"coulomb m={pot.m} V={[str(x) for x in pot.V]}",
        "family": "coulomb", "n": qn.n, "l": qn.l, "K": args.K,
        "sign": args.sign, "hbar": args.hbar,
        "corrections": [(k, _signed(series[k], args.sign)) for k in series.orders()],
        "partial_sums": [(K, _signed(series.partial_sum(K, args.hbar), args.sign)) for K in series.orders()],
    }
    if args.oracle:
        if args.V is not None:
            raise ValidationError("--oracle needs the Debye form (--alpha/--kappa)")
        spec = _debye_spec(args)
        problem = numeric.debye_problem(float(spec.alpha), float(spec.kappa), qn.n, qn.l, float(spec.m))
        job["oracle"] = _signed(_solve_oracle(problem), args.sign)
    return _render(job, args.format, args.digits)


def cmd_debye_table(args) -> str:
    _check_order(args.K, 0)
    spec, qn = _debye_spec(args), _qn(args)
    series, _ = coulomb_series(debye_taylor(spec, args.K + 1), qn, args.K)
    rows = [K for K in TABLE_ORDERS if K <= args.K]
    job = {
        "title": f"Debye alpha={spec.alpha} kappa={spec.kappa} m={spec.m}",
        "family": "debye", "n": qn.n, "l": qn.l, "K": args.K,
        "sign": args.sign, "hbar": args.hbar,
        "corrections": [],
        "partial_sums": [(K, _signed(series.partial_sum(K, args.hbar), args.sign)) for K in rows],
    }
    if args.format == "json":
        job["corrections"] = [(k, _signed(series[k], args.sign)) for k in series.orders()]
    if not args.no_oracle:
        problem = numeric.debye_problem(float(spec.alpha), float(spec.kappa), qn.n, qn.l, float(spec.m))
        job["oracle"] = _signed(_solve_oracle(problem), args.sign)
    return _render(job, args.format, args.digits)


def cmd_verify(args) -> tuple[str, bool]:
    _check_order(args.K, 1)
    qn = _qn(args)
    if args.family == "oscillator":
        if args.omega is None:
            args.omega = Fraction(1)
        pot = _oscillator(args, DEFAULT_OSC_F)
        series, table = oscillator_series(pot, qn, args.K)
        cross = cross_check_closed_forms("oscillator", [pot], DEFAULT_GRID, K=5)
    elif args.family == "coulomb":
        pot = _coulomb(args, args.K, DEFAULT_COULOMB_V)
        series, table = coulomb_series(pot, qn, args.K)
        cross = cross_check_closed_forms("coulomb", [pot], DEFAULT_GRID, K=5)
    else:
        spec = _debye_spec(args)
        pot = debye_taylor(spec, args.K + 1)
        series, table = coulomb_series(pot, qn, args.K)
        cross = cross_check_closed_forms("debye", [spec], DEFAULT_GRID, K=5)
    if args.corrupt:
        k = args.K
        table = table.with_entry(k, 0, table[k, 0] + 1)
    report = verify_table(table, series, pot, qn)
    report.cross_check = cross
    text = report.to_json() if args.format == "json" else report.to_text()
    return text, report.ok


def cmd_solve_num(args) -> str:
    qn = _qn(args)
    if args.family == "oscillator":
        pot = _oscillator(args)
        problem = numeric.oscillator_problem(
            float(pot.omega), [float(x) for x in pot.f], qn.n, qn.l, float(pot.m)
        )
    else:
        if args.family == "coulomb":
            args.kappa = Fraction(0)
        spec = _debye_spec(args)
        problem = numeric.debye_problem(float(spec.alpha), float(spec.kappa), qn.n, qn.l, float(spec.m))
    config = numeric.default_config(problem, mesh_points=args.mesh_points)
    value = _signed(numeric.solve_eigenvalue(problem, config), args.sign)
    if args.format == "json":
        return json.dumps({"family": args.family, "n": qn.n, "l": qn.l, "sign": args.sign,
                           "oracle": {"value": value, "decimal": f"{value:.{args.digits}f}"}}, indent=2)
    return f"{value:.{args.digits}f}"


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.digits < 1:
        parser.error("--digits must be >= 1")
    try:
        if args.command == "verify":
            text, ok = cmd_verify(args)
            print(text)
            return EXIT_OK if ok else EXIT_VERIFY
        handler = {
            "osc": cmd_osc,
            "coulomb": cmd_coulomb,
            "debye-table": cmd_debye_table,
            "solve-num": cmd_solve_num,
        }[args.command]
        print(handler(args))
        return EXIT_OK
    except (ValidationError, NoBoundStateError) as exc:
        print(f"hbarlpt: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (numeric.ConvergenceError, numeric.NoBoundStateError) as exc:
        print(f"hbarlpt: oracle failed: {exc}", file=sys.stderr)
        return EXIT_ORACLE


if __name__ == "__main__":
    sys.exit(main())
