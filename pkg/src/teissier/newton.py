"""Newton polyhedra of monomial ideals and integral closure.

For a monomial ideal the integral closure is spanned by the lattice points of
its Newton polyhedron conv(exponents) + R_{>=0}^d.  Membership of a point q is
the LP feasibility question: is there a convex combination of the generator
exponents lying componentwise below q?
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import (
    IdealError,
    MonomialIdeal,
    NotMPrimaryError,
    contains_monomial,
    format_ideal,
    is_subideal,
    normalize,
    power,
)
from .simplex import feasible_point

RationalPoint = tuple[Fraction, ...]


@dataclass(frozen=True)
class NewtonPolyhedron:
    dim: int
    points: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, I: MonomialIdeal) -> "NewtonPolyhedron":
        return cls(I.dim, I.gens)

    def __contains__(self, q) -> bool:
        return np_contains(self, q)

    def certificate(self, q: Sequence) -> list[Fraction] | None:
        """Convex weights lambda with sum lambda_j v_j <= q, if any."""
        q = [Fraction(c) for c in q]
        if len(q) != self.dim:
            raise IdealError(f"point of length {len(q)} in dimension {self.dim}")
        k, d = len(self.points), self.dim
        # columns: lambda_1..lambda_k, then one slack per coordinate
        A = [[v[i] for v in self.points] + [int(t == i) for t in range(d)] for i in range(d)]
        A.append([1] * k + [0] * d)
        sol = feasible_point(A, q + [1])
        return None if sol is None else sol[:k]


def np_contains(NP: NewtonPolyhedron, q: Sequence) -> bool:
    return NP.certificate(q) is not None


@lru_cache(maxsize=4096)
def integral_closure(I: MonomialIdeal) -> MonomialIdeal:
    bounds = I.pure_powers()
    if any(c is None for c in bounds):
        raise NotMPrimaryError(f"{format_ideal(I)} is not m-primary")
    if I.is_unit:
        return I
    NP = NewtonPolyhedron.of(I)
    found: list[tuple[int, ...]] = []
    box = sorted(itertools.product(*(range(c + 1) for c in bounds)), key=lambda p: (sum(p), p))
    for p in box:
        if contains_monomial(I, p) or any(all(f <= c for f, c in zip(g, p)) for g in found):
            continue
        if np_contains(NP, p):
            found.append(p)
    return normalize(I.dim, list(I.gens) + found)


def closure_report(I: MonomialIdeal) -> dict:
    closed = integral_closure(I)
    old = set(I.gens)
    return {
        "closure_gens": [list(g) for g in closed.gens],
        "added": [list(g) for g in closed.gens if g not in old],
    }


def closure_membership_oracle(I: MonomialIdeal, p: Sequence[int], kmax: int = 64) -> bool:
    """True if x^{kp} lies in I^k for some k <= kmax.  One-sided: False is inconclusive."""
    if kmax < 1:
        raise ValueError("kmax must be at least 1")
    for k in range(1, kmax + 1):
        if contains_monomial(power(I, k), [k * c for c in p]):
            return True
    return False


def is_reduction(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """J (contained in I) is a reduction of I."""
    if not is_subideal(J, I):
        raise IdealError(f"({format_ideal(J)}) is not contained in ({format_ideal(I)})")
    for K in (I, J):
        if not K.is_m_primary:
            raise NotMPrimaryError(f"{format_ideal(K)} is not m-primary")
    NP = NewtonPolyhedron.of(J)
    return all(np_contains(NP, g) for g in I.gens)


def scaled_closure_equal(I: MonomialIdeal, r: int, J: MonomialIdeal, s: int) -> bool:
    """Whether the closures of I^r and J^s agree, i.e. r NP(I) = s NP(J)."""
    if I.dim != J.dim:
        raise IdealError("dimension mismatch")
    if r < 1 or s < 1:
        raise ValueError("scales must be positive")
    NPI, NPJ = NewtonPolyhedron.of(I), NewtonPolyhedron.of(J)
    t = Fraction(r, s)
    return all(np_contains(NPJ, [t * c for c in v]) for v in I.gens) and all(
        np_contains(NPI, [c / t for c in w]) for w in J.gens
    )


def lower_hull_2d(I: MonomialIdeal) -> list[tuple[int, int]]:
    """Vertices of the bounded boundary of NP(I), from the y-axis to the x-axis."""
    pts = sorted(I.gens)
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (ox, oy), (ax, ay) = hull[-2], hull[-1]
            if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def covolume_2d(I: MonomialIdeal) -> Fraction:
    """Area of the complement of NP(I) in the positive quadrant."""
    if I.dim != 2:
        raise IdealError("covolume_2d needs a planar ideal")
    if not I.is_m_primary:
        raise NotMPrimaryError(f"{format_ideal(I)} is not m-primary")
    poly = [(0, 0)] + lower_hull_2d(I)[::-1]
    twice = 0
    for (x0, y0), (x1, y1) in zip(poly, poly[1:] + poly[:1]):
        twice += x0 * y1 - x1 * y0
    return Fraction(abs(twice), 2)
