"""Phase-one simplex over the rationals.

Decides feasibility of ``A x = b, x >= 0`` exactly.  Pivoting follows Bland's
rule (lowest eligible index enters, lowest basic index leaves on ties), which
rules out cycling, so the loop always terminates.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def feasible_point(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Return some x >= 0 with A x = b, or None if there is none."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for row, rhs in zip(A, b):
        row = [Fraction(v) for v in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-v for v in row], -rhs
        rows.append(row)
        rows[-1].extend(Fraction(int(i == len(rows) - 1)) for i in range(m))
        rows[-1].append(rhs)
    width = n + m
    basis = list(range(n, n + m))
    # reduced costs of "minimise the sum of artificials"
    cost = [-sum(r[j] for r in rows) for j in range(width)]
    for j in range(n, width):
        cost[j] = Fraction(0)
    value = -sum(r[-1] for r in rows)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        leave, best = None, None
        for i, r in enumerate(rows):
            if r[enter] > 0:
                ratio = r[-1] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    leave, best = i, ratio
        if leave is None:
            # cannot happen: the phase-one objective is bounded below by zero
            raise ArithmeticError("unbounded phase-one problem")
        piv_row = rows[leave]
        piv = piv_row[enter]
        piv_row[:] = [v / piv for v in piv_row]
        for i, r in enumerate(rows):
            if i != leave and r[enter]:
                f = r[enter]
                r[:] = [v - f * p for v, p in zip(r, piv_row)]
        f = cost[enter]
        cost = [c - f * p for c, p in zip(cost, piv_row[:-1])]
        value -= f * piv_row[-1]
        basis[leave] = enter

    if value != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = rows[i][-1]
    return x
