"""Monomial ideals in k[x_1, ..., x_d] and their colengths.

An ideal is stored as its minimal generating set, an antichain of exponent
vectors under componentwise order, kept in a read-only integer array sorted
lexicographically.  Heavy kernels (products, minimalisation, slice counting)
run on those arrays; everything user-facing speaks tuples of ints.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

ExponentVector = tuple[int, ...]

# Keeps int64 kernels exact: coordinate sums and planar areas stay below 2**63.
MAX_EXPONENT = 2**24


class IdealError(ValueError):
    """Malformed ideal data or incompatible operands."""


class NotMPrimaryError(IdealError):
    """The ideal has infinite colength."""


def _sort_rows(arr: np.ndarray) -> np.ndarray:
    if len(arr) < 2:
        return arr
    order = np.lexsort(arr.T[::-1])
    return arr[order]


def _as_array(dim: int, gens: Iterable[Sequence[int]]) -> np.ndarray:
    rows = [tuple(g) for g in gens]
    if not rows:
        raise IdealError("empty generator set")
    for g in rows:
        if len(g) != dim:
            raise IdealError(f"generator {g} has length {len(g)}, expected {dim}")
        for c in g:
            if int(c) != c or c < 0:
                raise IdealError(f"generator {g} has a non-natural entry")
            if c >= MAX_EXPONENT:
                raise IdealError(f"exponent {c} exceeds the supported bound {MAX_EXPONENT}")
    return np.array(rows, dtype=np.int64).reshape(len(rows), dim)


# ---------------------------------------------------------------------------
# array kernels


def _minimal_2d(pts: np.ndarray) -> np.ndarray:
    """Minimal points of a planar set, sorted by x ascending (so y descending)."""
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    y = pts[:, 1]
    keep = np.empty(len(pts), dtype=bool)
    keep[0] = True
    if len(pts) > 1:
        keep[1:] = y[1:] < np.minimum.accumulate(y)[:-1]
    return pts[keep]


def _member(gens: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Boolean mask: which rows of ``pts`` lie in the ideal minimally generated by ``gens``."""
    d = gens.shape[1]
    if len(pts) == 0:
        return np.zeros(0, dtype=bool)
    if d == 1:
        return pts[:, 0] >= gens[:, 0].min()
    if d == 2:
        # gens is a planar antichain: x ascending means y descending
        order = np.argsort(gens[:, 0], kind="stable")
        gx, gy = gens[order, 0], gens[order, 1]
        idx = np.searchsorted(gx, pts[:, 0], side="right") - 1
        ok = idx >= 0
        out = np.zeros(len(pts), dtype=bool)
        out[ok] = gy[idx[ok]] <= pts[ok, 1]
        return out
    out = np.zeros(len(pts), dtype=bool)
    step = max(1, 2_000_000 // max(1, len(gens) * d))
    for lo in range(0, len(pts), step):
        chunk = pts[lo:lo + step]
        out[lo:lo + step] = (gens[None, :, :] <= chunk[:, None, :]).all(axis=2).any(axis=1)
    return out


def _minimal(pts: np.ndarray) -> np.ndarray:
    """Minimal elements under componentwise order, rows sorted lexicographically."""
    d = pts.shape[1]
    if len(pts) == 0:
        return pts
    if d == 1:
        return pts[[int(np.argmin(pts[:, 0]))]]
    if d == 2:
        # an antichain sorted by x is already in lexicographic order
        return _minimal_2d(pts)
    # sweep the last coordinate; a point survives iff its projection is not in
    # the ideal spanned by projections of strictly lower layers
    pts = pts[np.argsort(pts[:, -1], kind="stable")]
    levels, starts = np.unique(pts[:, -1], return_index=True)
    bounds = list(starts[1:]) + [len(pts)]
    acc = None
    kept = []
    for z, lo, hi in zip(levels, starts, bounds):
        layer = _minimal(pts[lo:hi, :-1])
        if acc is not None:
            layer = layer[~_member(acc, layer)]
            if len(layer) == 0:
                continue
            acc = _minimal(np.vstack([acc, layer]))
        else:
            acc = layer
        kept.append(np.column_stack([layer, np.full(len(layer), z, dtype=np.int64)]))
    return _sort_rows(np.vstack(kept))


def _product_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    d = a.shape[1]
    sums = (a[:, None, :] + b[None, :, :]).reshape(-1, d)
    return _minimal(sums)


def _colength_sliced(gens: np.ndarray) -> int:
    d = gens.shape[1]
    if d == 1:
        return int(gens[0, 0])
    if d == 2:
        g = gens[np.argsort(gens[:, 0], kind="stable")]
        # bounded by c_x * c_y < 2**48, exact in int64
        return int(np.dot(np.diff(g[:, 0]), g[:-1, 1]))
    # the slice at height t is the (d-1)-ideal spanned by projections of
    # generators with last coordinate <= t; it only changes at generator heights
    g = gens[np.argsort(gens[:, -1], kind="stable")]
    levels, starts = np.unique(g[:, -1], return_index=True)
    bounds = list(starts[1:]) + [len(g)]
    top = [int(v) for v in levels[1:]]
    total = 0
    acc = None
    for k, (lo, hi) in enumerate(zip(starts, bounds)):
        layer = g[lo:hi, :-1]
        acc = layer if acc is None else _minimal(np.vstack([acc, layer]))
        if k == len(levels) - 1:
            break
        total += (top[k] - int(levels[k])) * _colength_sliced(acc)
    return total


# ---------------------------------------------------------------------------
# the ideal type


class MonomialIdeal:
    """A monomial ideal given by its minimal generators.

    Instances are immutable and hashable.  Build them through
    :func:`normalize` (or :meth:`from_generators`) unless the array is
    already a sorted antichain.
    """

    __slots__ = ("dim", "_arr", "_hash")

    def __init__(self, dim: int, arr: np.ndarray):
        arr = np.ascontiguousarray(arr, dtype=np.int64)
        arr.setflags(write=False)
        if arr.ndim != 2 or arr.shape[1] != dim or len(arr) == 0:
            raise IdealError("generator array has the wrong shape")
        if arr.max() >= MAX_EXPONENT:
            raise OverflowError("exponent exceeds supported range")
        self.dim = dim
        self._arr = arr
        self._hash = hash((dim, arr.tobytes()))

    @classmethod
    def from_generators(cls, dim: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return normalize(dim, gens)

    @property
    def array(self) -> np.ndarray:
        return self._arr

    @property
    def gens(self) -> tuple[ExponentVector, ...]:
        return tuple(tuple(int(c) for c in row) for row in self._arr)

    def __len__(self) -> int:
        return len(self._arr)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self._arr, other._arr)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"MonomialIdeal({format_ideal(self)})"

    def __contains__(self, p) -> bool:
        return contains_monomial(self, p)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return product(self, other)

    def __pow__(self, n: int) -> "MonomialIdeal":
        return power(self, n)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return intersect(self, other)

    @property
    def is_unit(self) -> bool:
        return len(self._arr) == 1 and not self._arr.any()

    def pure_powers(self) -> list[int | None]:
        """Exponent c_i of the pure power x_i^{c_i} among the generators, per axis."""
        if self.is_unit:
            return [0] * self.dim
        arr = self._arr
        out: list[int | None] = [None] * self.dim
        single = (arr != 0).sum(axis=1) == 1
        for row in arr[single]:
            i = int(np.flatnonzero(row)[0])
            out[i] = int(row[i])
        return out

    @property
    def is_m_primary(self) -> bool:
        return all(c is not None for c in self.pure_powers())

    @property
    def is_parameter(self) -> bool:
        """Generated by exactly ``dim`` monomials and m-primary (so all pure powers)."""
        return len(self) == self.dim and self.is_m_primary and not self.is_unit


# ---------------------------------------------------------------------------
# operations


def normalize(dim: int, raw_gens: Iterable[Sequence[int]]) -> MonomialIdeal:
    if dim < 1:
        raise IdealError("dimension must be positive")
    arr = _as_array(dim, raw_gens)
    return MonomialIdeal(dim, _minimal(arr))


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, np.zeros((1, dim), dtype=np.int64))


def maximal_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, _sort_rows(np.eye(dim, dtype=np.int64)))


def parameter_ideal(exponents: Sequence[int]) -> MonomialIdeal:
    """(x_1^{a_1}, ..., x_d^{a_d})."""
    d = len(exponents)
    return normalize(d, [tuple(a if j == i else 0 for j in range(d)) for i, a in enumerate(exponents)])


def _check_dims(I: MonomialIdeal, J: MonomialIdeal) -> None:
    if I.dim != J.dim:
        raise IdealError(f"dimension mismatch: {I.dim} vs {J.dim}")


def contains_monomial(I: MonomialIdeal, p: Sequence[int]) -> bool:
    if len(p) != I.dim:
        raise IdealError(f"point {tuple(p)} does not have length {I.dim}")
    return any(all(g <= c for g, c in zip(row, p)) for row in I.gens)


def is_subideal(I: MonomialIdeal, K: MonomialIdeal) -> bool:
    """I is contained in K."""
    _check_dims(I, K)
    return bool(_member(K.array, I.array).all())


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_dims(I, J)
    return MonomialIdeal(I.dim, _product_arrays(I.array, J.array))


@lru_cache(maxsize=64)
def _power_chain(I: MonomialIdeal) -> list[MonomialIdeal]:
    return [unit_ideal(I.dim), I]


def power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise IdealError("negative power")
    chain = _power_chain(I)
    while len(chain) <= n:
        chain.append(MonomialIdeal(I.dim, _product_arrays(chain[-1].array, I.array)))
    return chain[n]


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _check_dims(I, J)
    lcms = np.maximum(I.array[:, None, :], J.array[None, :, :]).reshape(-1, I.dim)
    return MonomialIdeal(I.dim, _minimal(lcms))


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The ideal quotient (I : J)."""
    _check_dims(I, J)
    out = None
    for g in J.array:
        part = MonomialIdeal(I.dim, _minimal(np.maximum(I.array - g, 0)))
        out = part if out is None else intersect(out, part)
    return out


def frobenius_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    """Ideal generated by the n-th powers of the minimal generators."""
    if n < 1:
        raise IdealError("frobenius power needs n >= 1")
    return MonomialIdeal(I.dim, _minimal(I.array * n))


def colength(I: MonomialIdeal, mode: str = "sliced") -> int:
    """Number of standard monomials, i.e. the length of R/I."""
    bounds = I.pure_powers()
    if any(c is None for c in bounds):
        raise NotMPrimaryError(f"{format_ideal(I)} is not m-primary")
    if I.is_unit:
        return 0
    if mode == "sliced":
        return _colength_sliced(I.array)
    if mode == "bruteforce":
        gens = I.gens
        return sum(
            1
            for p in itertools.product(*(range(c) for c in bounds))
            if not any(all(g <= c for g, c in zip(row, p)) for row in gens)
        )
    raise ValueError(f"unknown colength mode {mode!r}")


# ---------------------------------------------------------------------------
# formatting

def variable_names(dim: int) -> list[str]:
    if dim <= 3:
        return ["x", "y", "z"][:dim]
    return [f"x{i}" for i in range(1, dim + 1)]


def format_monomial(p: Sequence[int], names: Sequence[str]) -> str:
    parts = []
    for name, e in zip(names, p):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def format_ideal(I: MonomialIdeal) -> str:
    names = variable_names(I.dim)
    # degree-then-reverse-lex reads naturally: x^2, x*y, y^3
    gens = sorted(I.gens, key=lambda g: (sum(g), tuple(-c for c in g)))
    return ", ".join(format_monomial(g, names) for g in gens)
