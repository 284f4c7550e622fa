"""Exact checks of the multiplicity inequalities and equality criteria.

Every comparison is between integers or rationals; no root is ever taken in
floating point.  The Minkowski equality e(IJ)^{1/d} = e(I)^{1/d} + e(J)^{1/d}
is decided by rational root extraction: for positive integers a, b, c the
identity holds iff a/c and b/c are d-th powers of rationals u, v with u + v = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, gcd

from .core import (
    IdealError,
    MonomialIdeal,
    colength,
    colon,
    format_ideal,
    frobenius_power,
    is_subideal,
    power,
    product,
)
from .hilbert import MixedMultiplicities, mixed_multiplicities, multiplicity
from .newton import integral_closure, scaled_closure_equal


class TheoremViolation(AssertionError):
    """A proven statement failed on genuine data: an implementation bug."""


class Status(str, Enum):
    STRICT = "strict"
    EQUALITY = "equality"
    VIOLATION = "violation"


def compare(lhs, rhs) -> Status:
    if lhs < rhs:
        return Status.STRICT
    if lhs == rhs:
        return Status.EQUALITY
    return Status.VIOLATION


@dataclass
class TheoremReport:
    theorem: str
    inputs: dict
    statuses: list[Status] = field(default_factory=list)
    hypothesis_met: bool = True
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        if not self.hypothesis_met:
            return "hypothesis-unmet"
        if Status.VIOLATION in self.statuses:
            return "violation"
        if self.statuses and all(s is Status.EQUALITY for s in self.statuses):
            return "equality"
        return "holds"

    @property
    def ok(self) -> bool:
        return self.verdict != "violation"

    def to_json(self) -> dict:
        out = {
            "theorem": self.theorem,
            "inputs": self.inputs,
            "statuses": [s.value for s in self.statuses],
            "verdict": self.verdict,
        }
        if self.details:
            out["details"] = self.details
        return out


InequalityReport = TheoremReport


def _ideal_inputs(**ideals: MonomialIdeal) -> dict:
    return {k: format_ideal(v) for k, v in ideals.items()}


def _need_dim(d: int, *ideals: MonomialIdeal) -> None:
    for I in ideals:
        if I.dim != d:
            raise IdealError(f"this check needs dimension {d}, got {I.dim}")


# ---------------------------------------------------------------------------
# pure arithmetic on e-sequences


def check_teissier_first(e: MixedMultiplicities) -> TheoremReport:
    """e_i^d <= e_0^{d-i} e_d^i for every i."""
    d = e.dim
    statuses = [compare(e[i] ** d, e[0] ** (d - i) * e[d] ** i) for i in range(d + 1)]
    return TheoremReport("teissier-first", {"e": list(e)}, statuses)


def check_teissier_second(e: MixedMultiplicities) -> TheoremReport:
    """e_i^2 <= e_{i-1} e_{i+1} at every interior index."""
    statuses = [compare(e[i] ** 2, e[i - 1] * e[i + 1]) for i in range(1, e.dim)]
    return TheoremReport("teissier-second", {"e": list(e)}, statuses)


def geometric_ratio(e: MixedMultiplicities) -> tuple[int, int] | None:
    """(r, s) with e_i / e_{i-1} = r / s for all i, if the sequence is geometric."""
    ratios = {Fraction(e[i], e[i - 1]) for i in range(1, len(e))}
    if len(ratios) != 1:
        return None
    q = ratios.pop()
    return q.numerator, q.denominator


def _integer_root(n: int, d: int) -> int | None:
    if n < 0:
        return None
    lo, hi = 0, 1
    while hi ** d <= n:
        hi *= 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid ** d <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo if lo ** d == n else None


def rational_root(q: Fraction, d: int) -> Fraction | None:
    """The rational d-th root of q >= 0, when there is one."""
    num, den = _integer_root(q.numerator, d), _integer_root(q.denominator, d)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def minkowski_equality_holds(e_I: int, e_J: int, e_IJ: int, d: int) -> bool:
    """Exact test of e(IJ)^{1/d} == e(I)^{1/d} + e(J)^{1/d}."""
    u = rational_root(Fraction(e_I, e_IJ), d)
    v = rational_root(Fraction(e_J, e_IJ), d)
    return u is not None and v is not None and u + v == 1


# ---------------------------------------------------------------------------
# checks on ideals


def check_e1_squared(I: MonomialIdeal, J: MonomialIdeal) -> TheoremReport:
    _need_dim(2, I, J)
    e = mixed_multiplicities(I, J)
    return TheoremReport("e1-squared", _ideal_inputs(I=I, J=J), [compare(e[1] ** 2, e[0] * e[2])],
                         details={"e": list(e)})


def check_double_bound(I: MonomialIdeal, J: MonomialIdeal) -> TheoremReport:
    """e(IJ) <= 2 e(I) + 2 e(J) in dimension two."""
    _need_dim(2, I, J)
    lhs = multiplicity(product(I, J))
    rhs = 2 * multiplicity(I) + 2 * multiplicity(J)
    return TheoremReport("double-bound", _ideal_inputs(I=I, J=J), [compare(lhs, rhs)],
                         details={"e(IJ)": lhs, "bound": rhs})


def check_length_lemma(I: MonomialIdeal, J: MonomialIdeal, n: int) -> TheoremReport:
    """l(R/(J^n : I^[n])) <= l(R/I^[n]) + 2 l(R/J^n) - l(R/I^n J^n) for I = (a, b)."""
    _need_dim(2, I, J)
    if not I.is_parameter:
        raise IdealError(f"({format_ideal(I)}) is not generated by two pure powers")
    if not J.is_m_primary:
        raise IdealError(f"({format_ideal(J)}) is not m-primary")
    if n < 1:
        raise IdealError("n must be positive")
    frob = frobenius_power(I, n)
    Jn = power(J, n)
    lhs = colength(colon(Jn, frob))
    rhs = colength(frob) + 2 * colength(Jn) - colength(product(power(I, n), Jn))
    report = TheoremReport("length-lemma", _ideal_inputs(I=I, J=J), [compare(lhs, rhs)],
                           details={"n": n, "lhs": lhs, "rhs": rhs})
    report.inputs["n"] = n
    return report


def _expansion_identity(I: MonomialIdeal, J: MonomialIdeal, e: MixedMultiplicities) -> int:
    d = e.dim
    e_IJ = multiplicity(product(I, J))
    expected = sum(comb(d, i) * e[i] for i in range(d + 1))
    if e_IJ != expected:
        raise TheoremViolation(f"e(IJ) = {e_IJ} but the mixed multiplicities {list(e)} give {expected}")
    return e_IJ


def minkowski_status(I: MonomialIdeal, J: MonomialIdeal) -> Status:
    """Whether Minkowski's inequality for (I, J) is an equality or strict."""
    e = mixed_multiplicities(I, J)
    e_IJ = _expansion_identity(I, J, e)
    if not check_teissier_first(e).ok:
        raise TheoremViolation(f"Teissier's first inequality fails for {list(e)}")
    d = I.dim
    if minkowski_equality_holds(multiplicity(I), multiplicity(J), e_IJ, d):
        return Status.EQUALITY
    return Status.STRICT


@dataclass
class EqualityCertificate:
    ratio: tuple[int, int] | None
    condition_minkowski: bool
    condition_geometric: bool
    condition_closure: bool
    closure_ratio: tuple[int, int] | None = None
    orientation: str | None = None

    @property
    def agree(self) -> bool:
        return self.condition_minkowski == self.condition_geometric == self.condition_closure

    def to_json(self) -> dict:
        return {
            "ratio": list(self.ratio) if self.ratio else None,
            "closure_ratio": list(self.closure_ratio) if self.closure_ratio else None,
            "orientation": self.orientation,
            "condition_minkowski": self.condition_minkowski,
            "condition_geometric": self.condition_geometric,
            "condition_closure": self.condition_closure,
            "agree": self.agree,
        }


def closure_ratio(I: MonomialIdeal, J: MonomialIdeal) -> tuple[int, int] | None:
    """(r, s) with closure(I^r) = closure(J^s), if any.

    Both polyhedra meet the first axis at their pure-power exponents, so the
    only candidate is r / s = c_1(J) / c_1(I).
    """
    a, b = I.pure_powers()[0], J.pure_powers()[0]
    g = gcd(a, b)
    r, s = b // g, a // g
    return (r, s) if scaled_closure_equal(I, r, J, s) else None


def equality_pipeline(I: MonomialIdeal, J: MonomialIdeal, strict: bool = True) -> EqualityCertificate:
    """Evaluate the three equivalent equality conditions independently."""
    e = mixed_multiplicities(I, J)
    ratio = geometric_ratio(e)
    cratio = closure_ratio(I, J)
    orientation = None
    if ratio is not None:
        r, s = ratio
        if scaled_closure_equal(I, r, J, s):
            orientation = "closure(I^r) = closure(J^s)"
        elif scaled_closure_equal(I, s, J, r):
            orientation = "closure(I^s) = closure(J^r)"
    cert = EqualityCertificate(
        ratio=ratio,
        condition_minkowski=minkowski_status(I, J) is Status.EQUALITY,
        condition_geometric=ratio is not None,
        condition_closure=cratio is not None,
        closure_ratio=cratio,
        orientation=orientation,
    )
    if strict and not cert.agree:
        raise TheoremViolation(
            f"equality conditions disagree for ({format_ideal(I)}), ({format_ideal(J)}): {cert.to_json()}"
        )
    return cert


def check_rees(J: MonomialIdeal, I: MonomialIdeal) -> TheoremReport:
    """J inside I with e(J) = e(I) forces equal integral closures."""
    if not is_subideal(J, I):
        raise IdealError(f"({format_ideal(J)}) is not contained in ({format_ideal(I)})")
    e_J, e_I = multiplicity(J), multiplicity(I)
    report = TheoremReport("rees", _ideal_inputs(J=J, I=I), details={"e(J)": e_J, "e(I)": e_I})
    if e_J != e_I:
        report.hypothesis_met = False
        return report
    same = integral_closure(J) == integral_closure(I)
    report.statuses.append(Status.EQUALITY if same else Status.VIOLATION)
    return report


def check_dim1_additivity(I: MonomialIdeal, J: MonomialIdeal) -> TheoremReport:
    """e(IJ) = e(I) + e(J) in dimension one."""
    _need_dim(1, I, J)
    lhs = multiplicity(product(I, J))
    rhs = multiplicity(I) + multiplicity(J)
    status = Status.EQUALITY if lhs == rhs else Status.VIOLATION
    return TheoremReport("dim1-additivity", _ideal_inputs(I=I, J=J), [status],
                         details={"e(IJ)": lhs, "e(I)+e(J)": rhs})
