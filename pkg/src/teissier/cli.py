"""Command-line front end.

Exit codes: 0 success, 1 a theorem or oracle check failed, 2 bad input,
3 an interpolation did not stabilise.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass, field
from math import factorial

from .core import IdealError, MonomialIdeal, colength, format_ideal, power
from .hilbert import (
    MixedMultiplicityError,
    StabilizationError,
    hilbert_polynomial,
    mixed_multiplicities,
    mixed_via_vandermonde,
    multiplicity,
)
from .io import ideal_to_json, parse_ideal
from .milnor import BrieskornError, BrieskornPolynomial, jacobian_ideal, milnor_report
from .newton import closure_membership_oracle, closure_report, covolume_2d, integral_closure, is_reduction
from .sweep import sweep
from .theorems import (
    TheoremViolation,
    check_rees,
    check_teissier_first,
    check_teissier_second,
    equality_pipeline,
    minkowski_status,
)

OK, VIOLATION, INPUT_ERROR, NOT_STABLE = 0, 1, 2, 3
VERBS = ("colength", "mult", "hilbert", "mixed", "closure", "reduce", "minkowski",
         "equality", "rees", "milnor", "sweep")


@dataclass
class Report:
    verdict: str
    payload: dict = field(default_factory=dict)
    table: str = ""
    exit_code: int = OK

    def render(self, as_json: bool) -> str:
        if as_json:
            return json.dumps(self.payload, sort_keys=True, indent=2)
        return self.table


class OracleMismatch(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise IdealError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="teissier", description="Multiplicities and mixed multiplicities of monomial ideals.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help, ideals=()):
        p = sub.add_parser(name, help=help)
        for flag in ideals:
            p.add_argument(f"--{flag}", required=True, metavar="IDEAL",
                           help="file path, inline JSON or text such as 'x^2, x*y, y^3'")
        if ideals:
            p.add_argument("--dim", type=int, help="ambient dimension for text input")
        p.add_argument("--json", action="store_true", help="emit machine-readable JSON")
        p.add_argument("--oracle", action="store_true", help="cross-check against brute-force oracles")
        return p

    verb("colength", "length of R/I", "i").add_argument("--mode", choices=("sliced", "bruteforce"), default="sliced")
    verb("mult", "multiplicity e(I)", "i")
    verb("hilbert", "Hilbert-Samuel polynomial", "i")
    verb("mixed", "mixed multiplicities e_i(I|J)", "ij")
    verb("closure", "integral closure", "i")
    verb("reduce", "is J a reduction of I", "ij")
    verb("minkowski", "Minkowski inequality status", "ij")
    verb("equality", "equality criteria certificate", "ij")
    verb("rees", "Rees multiplicity theorem for J inside I", "ij")
    p = verb("milnor", "sectional Milnor numbers of x_0^a_0 + ... + x_n^a_n")
    p.add_argument("--exponents", required=True, help="comma-separated, e.g. 3,3")
    p = verb("sweep", "seeded property sweep")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--max-exp", type=int, default=5)
    return parser


# ---------------------------------------------------------------------------
# verbs


def _ideals(args) -> tuple[MonomialIdeal, ...]:
    out = []
    for flag in ("i", "j"):
        src = getattr(args, flag, None)
        if src is not None:
            out.append(parse_ideal(src, args.dim))
    if len(out) == 2 and out[0].dim != out[1].dim:
        raise IdealError("the two ideals live in different dimensions")
    return tuple(out)


def _require_m_primary(*ideals: MonomialIdeal) -> None:
    for I in ideals:
        if not I.is_m_primary:
            raise IdealError(f"({format_ideal(I)}) is not m-primary")


def _oracle_closure(I: MonomialIdeal) -> None:
    closed = integral_closure(I)
    bounds = I.pure_powers()
    kmax = min(64, factorial(I.dim) * max(bounds) ** I.dim)
    for p in itertools.product(*(range(c + 1) for c in bounds)):
        if p not in closed and closure_membership_oracle(I, p, kmax):
            raise OracleMismatch(f"power oracle puts {p} in the closure of ({format_ideal(I)})")


def _oracle_mixed(I, J, e) -> None:
    other = mixed_via_vandermonde(I, J)
    if other != e:
        raise OracleMismatch(f"Vandermonde extraction gives {list(other)}, interpolation {list(e)}")


def _oracle_hilbert(I: MonomialIdeal) -> None:
    P = hilbert_polynomial(I)
    for n in range(P.threshold, P.threshold + I.dim + 1):
        if P(n) != colength(power(I, n), "bruteforce"):
            raise OracleMismatch(f"Hilbert polynomial disagrees with box count at n = {n}")
    if I.dim == 2 and P.multiplicity != 2 * covolume_2d(I):
        raise OracleMismatch("multiplicity differs from twice the covolume")


def _do_colength(args):
    (I,) = _ideals(args)
    _require_m_primary(I)
    value = colength(I, args.mode)
    if args.oracle and colength(I, "bruteforce") != colength(I, "sliced"):
        raise OracleMismatch("sliced and box colengths differ")
    return Report("ok", {"ideal": ideal_to_json(I), "colength": value}, f"colength({format_ideal(I)}) = {value}")


def _do_mult(args):
    (I,) = _ideals(args)
    _require_m_primary(I)
    e = multiplicity(I)
    if args.oracle:
        _oracle_hilbert(I)
    return Report("ok", {"ideal": ideal_to_json(I), "multiplicity": e}, f"e({format_ideal(I)}) = {e}")


def _do_hilbert(args):
    (I,) = _ideals(args)
    _require_m_primary(I)
    P = hilbert_polynomial(I)
    if args.oracle:
        _oracle_hilbert(I)
    lines = [f"ideal      ({format_ideal(I)})", f"e_0..e_d   {list(P.coeffs_binomial)}", f"threshold  {P.threshold}"]
    return Report("ok", {"ideal": ideal_to_json(I), **P.to_json()}, "\n".join(lines))


def _do_mixed(args):
    I, J = _ideals(args)
    _require_m_primary(I, J)
    e = mixed_multiplicities(I, J)
    if args.oracle:
        _oracle_mixed(I, J, e)
    t1, t2 = check_teissier_first(e), check_teissier_second(e)
    payload = {**e.to_json(), "teissier_first": t1.to_json(), "teissier_second": t2.to_json()}
    table = "\n".join([
        f"I = ({format_ideal(I)})",
        f"J = ({format_ideal(J)})",
        f"e = {list(e)}",
        f"Teissier first:  {t1.verdict}",
        f"Teissier second: {t2.verdict}",
    ])
    code = OK if t1.ok and t2.ok else VIOLATION
    return Report("ok" if code == OK else "violation", payload, table, code)


def _do_closure(args):
    (I,) = _ideals(args)
    _require_m_primary(I)
    report = closure_report(I)
    if args.oracle:
        _oracle_closure(I)
    table = f"closure({format_ideal(I)}) = ({format_ideal(integral_closure(I))})"
    return Report("ok", report, table)


def _do_reduce(args):
    I, J = _ideals(args)
    _require_m_primary(I, J)
    verdict = is_reduction(J, I)
    if args.oracle:
        _oracle_closure(I)
        _oracle_closure(J)
        if verdict != (integral_closure(I) == integral_closure(J)):
            raise OracleMismatch("reduction test disagrees with the closures")
    table = f"({format_ideal(J)}) is {'' if verdict else 'not '}a reduction of ({format_ideal(I)})"
    return Report("ok", {"reduction": verdict}, table)


def _do_minkowski(args):
    I, J = _ideals(args)
    _require_m_primary(I, J)
    e = mixed_multiplicities(I, J)
    if args.oracle:
        _oracle_mixed(I, J, e)
    status = minkowski_status(I, J)
    payload = {"status": status.value, "e": list(e), "e(I)": multiplicity(I), "e(J)": multiplicity(J)}
    return Report(status.value, payload, f"Minkowski inequality: {status.value} (e = {list(e)})")


def _do_equality(args):
    I, J = _ideals(args)
    _require_m_primary(I, J)
    if args.oracle:
        _oracle_mixed(I, J, mixed_multiplicities(I, J))
    cert = equality_pipeline(I, J)
    ratio = f"{cert.ratio[0]}/{cert.ratio[1]}" if cert.ratio else "none"
    verdict = "equality" if cert.condition_minkowski else "strict"
    table = "\n".join([
        f"verdict    {verdict}",
        f"ratio      {ratio}",
        f"minkowski  {cert.condition_minkowski}",
        f"geometric  {cert.condition_geometric}",
        f"closure    {cert.condition_closure}",
        f"agree      {cert.agree}",
    ])
    return Report(verdict, {"verdict": verdict, **cert.to_json()}, table)


def _do_rees(args):
    I, J = _ideals(args)
    _require_m_primary(I, J)
    report = check_rees(J, I)
    if args.oracle:
        _oracle_closure(I)
        _oracle_closure(J)
    code = VIOLATION if report.verdict == "violation" else OK
    table = f"Rees: {report.verdict} (e(J) = {report.details['e(J)']}, e(I) = {report.details['e(I)']})"
    return Report(report.verdict, report.to_json(), table, code)


def _do_milnor(args):
    try:
        exps = [int(a) for a in args.exponents.split(",")]
    except ValueError:
        raise IdealError(f"bad exponent list {args.exponents!r}") from None
    f = BrieskornPolynomial.of(exps)
    out = milnor_report(f)
    if args.oracle:
        if colength(jacobian_ideal(f), "bruteforce") != out["milnor"]:
            raise OracleMismatch("box count of the Jacobian quotient differs")
    code = OK if out["log_convex"] and out["low_sections"] else VIOLATION
    table = "\n".join([
        f"f          {f}",
        f"mu         {out['mu']}",
        f"milnor     {out['milnor']}",
        f"log-convex {out['log_convex']}",
        f"alt sum    {out['alt_sum']} (formal alternating sum)",
    ])
    return Report("ok" if code == OK else "violation", out, table, code)


def _do_sweep(args):
    try:
        result = sweep(args.seed, args.count, args.dim, args.max_exp)
    except ValueError as exc:
        raise IdealError(str(exc)) from None
    code = VIOLATION if result["violations"] else OK
    lines = [result["summary"]]
    for v in result["violations"]:
        lines.append(f"  reproduce: seed={v['seed']} index={v['index']} {v['property']}: {v['detail']}")
    return Report("ok" if code == OK else "violation", result, "\n".join(lines), code)


HANDLERS = {name: globals()[f"_do_{name}"] for name in VERBS}


def run(argv: list[str]) -> Report:
    try:
        args = build_parser().parse_args(argv)
    except IdealError as exc:
        return Report("input-error", {"error": str(exc)}, f"error: {exc}", INPUT_ERROR)
    try:
        report = HANDLERS[args.verb](args)
    except (IdealError, BrieskornError, OverflowError) as exc:
        return Report("input-error", {"error": str(exc)}, f"error: {exc}", INPUT_ERROR)
    except StabilizationError as exc:
        return Report("not-stable", {"error": str(exc)}, f"error: {exc}", NOT_STABLE)
    except OracleMismatch as exc:
        return Report("oracle-mismatch", {"error": str(exc)}, f"oracle mismatch: {exc}", VIOLATION)
    except (TheoremViolation, MixedMultiplicityError) as exc:
        return Report("violation", {"error": str(exc)}, f"violation: {exc}", VIOLATION)
    return report


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    report = run(argv)
    as_json = "--json" in argv
    out = report.render(as_json)
    stream = sys.stdout if report.exit_code in (OK, VIOLATION) else sys.stderr
    print(out, file=stream)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
