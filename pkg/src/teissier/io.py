"""Reading and writing ideal literals.

Two spellings are accepted everywhere an ideal is expected:

* JSON: ``{"dim": 2, "gens": [[2, 0], [1, 1], [0, 3]]}``
* text: ``"x^2, x*y, y^3"`` with variables ``x, y, z`` or ``x1 .. xd``.

A string naming an existing file is read and parsed as either form.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction

from .core import IdealError, MonomialIdeal, normalize

_FACTOR = re.compile(r"^\s*([a-z]\w*)\s*(?:\^\s*(\d+))?\s*$")


def _var_index(name: str, dim: int | None) -> int:
    if name in ("x", "y", "z") and (dim is None or dim <= 3):
        return "xyz".index(name)
    m = re.fullmatch(r"x(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return int(m.group(1)) - 1
    raise IdealError(f"unknown variable {name!r}")


def parse_text(text: str, dim: int | None = None) -> MonomialIdeal:
    """Parse ``"x^2, x*y, y^3"``.  Without ``dim`` the highest variable used decides it."""
    terms = [t for t in text.split(",")]
    if not terms or any(not t.strip() for t in terms):
        raise IdealError(f"malformed ideal text {text!r}")
    monos = []
    for term in terms:
        exps: dict[int, int] = {}
        if term.strip() == "1":
            monos.append(exps)
            continue
        for factor in term.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise IdealError(f"malformed monomial {term.strip()!r}")
            i = _var_index(m.group(1), dim)
            exps[i] = exps.get(i, 0) + int(m.group(2) or 1)
        monos.append(exps)
    used = max((i for e in monos for i in e), default=0) + 1
    if dim is None:
        # x, y, z only: a bare "x, y" is the plane, "x,y,z" is 3-space
        dim = used
    if used > dim:
        raise IdealError(f"variable index {used} exceeds dimension {dim}")
    return normalize(dim, [tuple(e.get(i, 0) for i in range(dim)) for e in monos])


def ideal_from_json(obj) -> MonomialIdeal:
    if not isinstance(obj, dict) or "dim" not in obj or "gens" not in obj:
        raise IdealError('ideal JSON needs keys "dim" and "gens"')
    dim = obj["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise IdealError("dim must be an integer")
    gens = obj["gens"]
    if not isinstance(gens, list) or not all(isinstance(g, list) for g in gens):
        raise IdealError("gens must be a list of lists")
    for g in gens:
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in g):
            raise IdealError("exponents must be integers")
    return normalize(dim, gens)


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"dim": I.dim, "gens": [list(g) for g in I.gens]}


def parse_ideal(source: str, dim: int | None = None) -> MonomialIdeal:
    """Parse a file path, inline JSON, or text sugar."""
    if os.path.isfile(source):
        with open(source) as fh:
            source = fh.read()
    stripped = source.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise IdealError(f"malformed ideal JSON: {exc}") from None
        I = ideal_from_json(obj)
        if dim is not None and I.dim != dim:
            raise IdealError(f"expected dimension {dim}, got {I.dim}")
        return I
    return parse_text(stripped, dim)


def fraction_json(q: Fraction) -> dict:
    return {"num": q.numerator, "den": q.denominator}
