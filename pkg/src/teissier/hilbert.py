"""Hilbert-Samuel and Bhattacharya polynomials of monomial ideals.

Both polynomials are recovered exactly from colength samples.  A fit is
accepted once two successive rounds (the base point doubling in between)
produce the same interpolant and it also predicts a handful of fresh probe
values.  The round at which the interpolant first appeared is reported as the
threshold.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable

from .core import (
    IdealError,
    MonomialIdeal,
    NotMPrimaryError,
    colength,
    format_ideal,
    frobenius_power,
    power,
    product,
)
from .linalg import solve

MAX_DOUBLINGS = 10


class StabilizationError(RuntimeError):
    """Interpolants did not settle before the doubling cap."""

    def __init__(self, message: str, candidates=()):
        super().__init__(message)
        self.candidates = tuple(candidates)


class MixedMultiplicityError(ArithmeticError):
    """Extracted mixed multiplicities are not positive integers."""


def binom(x: int, k: int) -> int:
    """C(x, k) as a polynomial in x, valid for negative x too."""
    if k < 0:
        return 0
    num = 1
    for j in range(k):
        num *= x - j
    return num // factorial(k)


# ---------------------------------------------------------------------------
# polynomial types


@dataclass(frozen=True)
class HilbertPolynomial:
    dim: int
    coeffs_binomial: tuple[int, ...]
    threshold: int

    def __call__(self, n: int) -> int:
        d = self.dim
        return sum((-1) ** i * e * binom(n + d - 1 - i, d - i) for i, e in enumerate(self.coeffs_binomial))

    @property
    def multiplicity(self) -> int:
        return self.coeffs_binomial[0]

    def to_json(self) -> dict:
        return {"threshold": self.threshold, "e": list(self.coeffs_binomial)}


@dataclass(frozen=True)
class BhattacharyaPolynomial:
    dim: int
    coeffs: dict = field(compare=True)  # (j, k) -> Fraction, coefficient of r^j s^k
    threshold: int

    def __call__(self, r, s) -> Fraction:
        return sum((c * Fraction(r) ** j * Fraction(s) ** k for (j, k), c in self.coeffs.items()), Fraction(0))

    def __hash__(self):
        return hash((self.dim, tuple(sorted(self.coeffs.items())), self.threshold))

    @property
    def degree(self) -> int:
        return max((j + k for (j, k), c in self.coeffs.items() if c), default=0)

    def top_coefficient(self, i: int) -> Fraction:
        """Coefficient of r^{d-i} s^i."""
        return self.coeffs.get((self.dim - i, i), Fraction(0))

    def to_json(self) -> dict:
        terms = [
            {"r": j, "s": k, "num": c.numerator, "den": c.denominator}
            for (j, k), c in sorted(self.coeffs.items())
            if c
        ]
        return {"threshold": self.threshold, "terms": terms}


@dataclass(frozen=True)
class MixedMultiplicities:
    dim: int
    e: tuple[int, ...]

    def __post_init__(self):
        if len(self.e) != self.dim + 1:
            raise ValueError(f"need {self.dim + 1} mixed multiplicities, got {len(self.e)}")
        for v in self.e:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"mixed multiplicities must be positive integers, got {self.e}")

    @classmethod
    def of(cls, seq) -> "MixedMultiplicities":
        seq = tuple(int(v) for v in seq)
        return cls(len(seq) - 1, seq)

    def __getitem__(self, i: int) -> int:
        return self.e[i]

    def __iter__(self):
        return iter(self.e)

    def __len__(self):
        return len(self.e)

    def to_json(self) -> dict:
        return {"e": list(self.e)}


# ---------------------------------------------------------------------------
# interpolation engines


def _fit_univariate(sample: Callable[[int], int], d: int, N: int) -> tuple[Fraction, ...]:
    nodes = range(N, N + d + 1)
    A = [[(-1) ** i * binom(n + d - 1 - i, d - i) for i in range(d + 1)] for n in nodes]
    return tuple(solve(A, [sample(n) for n in nodes]))


def _eval_univariate(coeffs, d: int, n: int) -> Fraction:
    return sum((-1) ** i * c * binom(n + d - 1 - i, d - i) for i, c in enumerate(coeffs))


def interpolate_univariate(sample: Callable[[int], int], d: int, start: int,
                           max_doublings: int = MAX_DOUBLINGS) -> tuple[tuple[Fraction, ...], int]:
    """Recover a degree-d polynomial in the basis sum (-1)^i e_i C(n+d-1-i, d-i).

    Returns (coefficients, threshold).
    """
    N, prev, older = start, None, None
    for _ in range(max_doublings + 1):
        cand = _fit_univariate(sample, d, N)
        if prev is not None and cand == prev[1]:
            probes = range(N + d + 1, N + 2 * d + 3)
            if all(_eval_univariate(cand, d, n) == sample(n) for n in probes):
                return cand, prev[0]
        older, prev = prev, (N, cand)
        N *= 2
    raise StabilizationError(
        f"Hilbert polynomial did not stabilise by n = {prev[0]}",
        candidates=tuple(c[1] for c in (older, prev) if c is not None),
    )


def _monomials(d: int) -> list[tuple[int, int]]:
    return [(j, k) for t in range(d + 1) for j in range(t, -1, -1) for k in [t - j]]


def _fit_bivariate(sample: Callable[[int, int], int], d: int, N: int) -> dict:
    terms = _monomials(d)
    nodes = [(N + a, N + b) for a in range(d + 1) for b in range(d + 1 - a)]
    A = [[r ** j * s ** k for j, k in terms] for r, s in nodes]
    sol = solve(A, [sample(r, s) for r, s in nodes])
    return dict(zip(terms, sol))


def interpolate_bivariate(sample: Callable[[int, int], int], d: int, start: int,
                          max_doublings: int = MAX_DOUBLINGS) -> tuple[dict, int]:
    """Recover a total-degree-d polynomial in r, s on triangular grids based at (N, N)."""
    N, prev, older = start, None, None
    for _ in range(max_doublings + 1):
        cand = _fit_bivariate(sample, d, N)
        if prev is not None and cand == prev[1]:
            # diagonal probes off the fitting grid
            probes = [(N + d + j, N + d + j) for j in range(d + 2)]
            if all(sum(c * r ** j * s ** k for (j, k), c in cand.items()) == sample(r, s)
                   for r, s in probes):
                return cand, prev[0]
        older, prev = prev, (N, cand)
        N *= 2
    raise StabilizationError(
        f"Bhattacharya polynomial did not stabilise by N = {prev[0]}",
        candidates=tuple(c[1] for c in (older, prev) if c is not None),
    )


# ---------------------------------------------------------------------------
# ideal-level operations


def _require_m_primary(*ideals: MonomialIdeal) -> None:
    for I in ideals:
        if not I.is_m_primary:
            raise NotMPrimaryError(f"{format_ideal(I)} is not m-primary")
    if len({I.dim for I in ideals}) > 1:
        raise IdealError("ideals live in different dimensions")


def start_index(*ideals: MonomialIdeal) -> int:
    """d * (1 + largest total degree among the generators)."""
    d = ideals[0].dim
    top = max(sum(g) for I in ideals for g in I.gens)
    return d * (1 + top)


def hilbert_function(I: MonomialIdeal, n: int) -> int:
    _require_m_primary(I)
    return colength(power(I, n))


@lru_cache(maxsize=1024)
def hilbert_polynomial(I: MonomialIdeal) -> HilbertPolynomial:
    _require_m_primary(I)
    d = I.dim
    coeffs, threshold = interpolate_univariate(lambda n: hilbert_function(I, n), d, start_index(I))
    if any(c.denominator != 1 for c in coeffs):
        raise MixedMultiplicityError(f"non-integral Hilbert coefficients {coeffs}")
    return HilbertPolynomial(d, tuple(int(c) for c in coeffs), threshold)


def multiplicity(I: MonomialIdeal) -> int:
    return hilbert_polynomial(I).multiplicity


def bhattacharya_function(I: MonomialIdeal, J: MonomialIdeal, r: int, s: int) -> int:
    _require_m_primary(I, J)
    return colength(product(power(I, r), power(J, s)))


class _GridSampler:
    """Colengths of I^r J^s, reusing neighbouring products on the grid."""

    def __init__(self, I: MonomialIdeal, J: MonomialIdeal):
        self.I, self.J = I, J
        self._ideals: dict[tuple[int, int], MonomialIdeal] = {}

    def ideal(self, r: int, s: int) -> MonomialIdeal:
        got = self._ideals.get((r, s))
        if got is not None:
            return got
        if (r - 1, s) in self._ideals:
            got = product(self._ideals[r - 1, s], self.I)
        elif (r, s - 1) in self._ideals:
            got = product(self._ideals[r, s - 1], self.J)
        elif (r - 1, s - 1) in self._ideals:
            got = product(product(self._ideals[r - 1, s - 1], self.I), self.J)
        else:
            got = product(power(self.I, r), power(self.J, s))
        self._ideals[r, s] = got
        return got

    def __call__(self, r: int, s: int) -> int:
        return colength(self.ideal(r, s))


@lru_cache(maxsize=1024)
def bhattacharya_polynomial(I: MonomialIdeal, J: MonomialIdeal) -> BhattacharyaPolynomial:
    _require_m_primary(I, J)
    d = I.dim
    coeffs, threshold = interpolate_bivariate(_GridSampler(I, J), d, start_index(I, J))
    return BhattacharyaPolynomial(d, coeffs, threshold)


def _as_mixed(d: int, values, source: str) -> MixedMultiplicities:
    for i, v in enumerate(values):
        if v.denominator != 1 or v < 1:
            raise MixedMultiplicityError(f"{source}: e_{i} = {v} is not a positive integer")
    return MixedMultiplicities(d, tuple(int(v) for v in values))


@lru_cache(maxsize=1024)
def mixed_multiplicities(I: MonomialIdeal, J: MonomialIdeal) -> MixedMultiplicities:
    P = bhattacharya_polynomial(I, J)
    d = P.dim
    values = [Fraction(factorial(d), comb(d, i)) * P.top_coefficient(i) for i in range(d + 1)]
    return _as_mixed(d, values, "Bhattacharya extraction")


def mixed_via_vandermonde(I: MonomialIdeal, J: MonomialIdeal) -> MixedMultiplicities:
    """Solve e(I J^k) = sum_i C(d,i) e_i k^i for k = 0..d."""
    _require_m_primary(I, J)
    d = I.dim
    rhs = [multiplicity(product(I, power(J, k))) for k in range(d + 1)]
    A = [[comb(d, i) * k ** i for i in range(d + 1)] for k in range(d + 1)]
    return _as_mixed(d, solve(A, rhs), "Vandermonde extraction")


def lech_ratio(I: MonomialIdeal, n: int) -> Fraction:
    """colength(I^[n]) / n^d for a parameter ideal."""
    if not I.is_parameter:
        raise IdealError(f"{format_ideal(I)} is not a parameter ideal")
    if n < 1:
        raise IdealError("n must be positive")
    return Fraction(colength(frobenius_power(I, n)), n ** I.dim)
