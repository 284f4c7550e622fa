"""Exact linear solves over the rationals.

Elimination is fraction-free (Bareiss) on an integer matrix; rational input is
cleared of denominators row by row first.  Only the final back substitution
produces fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularSystemError(ArithmeticError):
    pass


def _integer_rows(A: Sequence[Sequence], b: Sequence) -> list[list[int]]:
    rows = []
    for row, rhs in zip(A, b):
        entries = [Fraction(v) for v in row] + [Fraction(rhs)]
        scale = lcm(*(q.denominator for q in entries))
        rows.append([int(q * scale) for q in entries])
    return rows


def solve(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve the square system A x = b exactly."""
    n = len(A)
    if n == 0 or any(len(row) != n for row in A) or len(b) != n:
        raise ValueError("solve needs a square system")
    M = _integer_rows(A, b)
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    break
            else:
                raise SingularSystemError("matrix is singular")
        pivot = M[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                # exact by Sylvester's identity
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = pivot
    if M[n - 1][n - 1] == 0:
        raise SingularSystemError("matrix is singular")
    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(M[i][n]) - sum(M[i][j] * x[j] for j in range(i + 1, n))
        x[i] = acc / M[i][i]
    return x
