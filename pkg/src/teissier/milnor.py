"""Sectional Milnor numbers of Brieskorn-Pham singularities.

For f = x_0^{a_0} + ... + x_n^{a_n} the Jacobian ideal is generated by pure
powers, so the sectional Milnor numbers are the mixed multiplicities of the
maximal ideal and that monomial ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .core import MonomialIdeal, colength, maximal_ideal, parameter_ideal
from .hilbert import MixedMultiplicities, mixed_multiplicities
from .theorems import Status, TheoremReport, TheoremViolation, compare


class BrieskornError(ValueError):
    pass


@dataclass(frozen=True)
class BrieskornPolynomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if not self.exponents:
            raise BrieskornError("need at least one exponent")
        for a in self.exponents:
            if not isinstance(a, int) or isinstance(a, bool) or a < 2:
                raise BrieskornError(f"exponent {a!r} does not give an isolated singularity")

    @classmethod
    def of(cls, exponents) -> "BrieskornPolynomial":
        return cls(tuple(int(a) for a in exponents))

    @property
    def n(self) -> int:
        return len(self.exponents) - 1

    def __str__(self) -> str:
        names = ["x", "y", "z"] if len(self.exponents) <= 3 else [f"x{i}" for i in range(len(self.exponents))]
        return " + ".join(f"{v}^{a}" for v, a in zip(names, self.exponents))


@dataclass(frozen=True)
class MilnorSpectrum:
    mu: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(v, int) or v < 1 for v in self.mu):
            raise ValueError(f"sectional Milnor numbers must be positive integers: {self.mu}")

    def __getitem__(self, i: int) -> int:
        return self.mu[i]

    def __len__(self) -> int:
        return len(self.mu)


def jacobian_ideal(f: BrieskornPolynomial) -> MonomialIdeal:
    return parameter_ideal([a - 1 for a in f.exponents])


def milnor_number(f: BrieskornPolynomial) -> int:
    mu = colength(jacobian_ideal(f))
    expected = prod(a - 1 for a in f.exponents)
    if mu != expected:
        raise TheoremViolation(f"Milnor number {mu} of {f} differs from {expected}")
    return mu


def sectional_milnor(f: BrieskornPolynomial) -> MilnorSpectrum:
    J = jacobian_ideal(f)
    e = mixed_multiplicities(maximal_ideal(J.dim), J)
    return MilnorSpectrum(e.e)


def check_low_sections(spec: MilnorSpectrum, f: BrieskornPolynomial) -> TheoremReport:
    """mu^(0) = 1 and mu^(1) = order of f minus one."""
    statuses = [
        Status.EQUALITY if spec[0] == 1 else Status.VIOLATION,
        Status.EQUALITY if spec[1] == min(f.exponents) - 1 else Status.VIOLATION,
    ]
    return TheoremReport("low-sections", {"exponents": list(f.exponents)}, statuses,
                         details={"mu": list(spec.mu)})


def check_log_convexity(spec: MilnorSpectrum) -> TheoremReport:
    statuses = [compare(spec[i] ** 2, spec[i - 1] * spec[i + 1]) for i in range(1, len(spec) - 1)]
    return TheoremReport("log-convexity", {"mu": list(spec.mu)}, statuses)


def euler_characteristic_sum(spec: MilnorSpectrum) -> int:
    """Formal alternating sum mu^(0) - mu^(1) + ... +- mu^(n), omitting the top entry."""
    return sum((-1) ** i * spec[i] for i in range(len(spec) - 1))


def milnor_report(f: BrieskornPolynomial) -> dict:
    spec = sectional_milnor(f)
    mu = milnor_number(f)
    if spec[len(spec) - 1] != mu:
        raise TheoremViolation(f"top sectional Milnor number {spec[len(spec) - 1]} differs from {mu}")
    low = check_low_sections(spec, f)
    convex = check_log_convexity(spec)
    return {
        "exponents": list(f.exponents),
        "mu": list(spec.mu),
        "milnor": mu,
        "low_sections": low.ok,
        "log_convex": convex.ok,
        "alt_sum": euler_characteristic_sum(spec),
        "alt_sum_note": "formal alternating sum",
    }


def as_mixed(spec: MilnorSpectrum) -> MixedMultiplicities:
    return MixedMultiplicities.of(spec.mu)
