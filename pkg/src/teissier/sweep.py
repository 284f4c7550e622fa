"""Seeded property sweeps over random m-primary monomial ideal pairs.

Pair ``i`` of a sweep is generated from its own RNG seeded with
``"{seed}:{i}"``, so any failure is reproducible from (seed, index) alone and
results do not depend on how pairs are spread over workers.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable

from .core import MonomialIdeal, format_ideal, intersect, is_subideal, normalize, parameter_ideal
from .hilbert import mixed_multiplicities, mixed_via_vandermonde, multiplicity
from .io import ideal_to_json
from .newton import covolume_2d
from .theorems import (
    check_dim1_additivity,
    check_double_bound,
    check_e1_squared,
    check_rees,
    check_teissier_first,
    check_teissier_second,
    equality_pipeline,
)

THREADS_ENV = "TEISSIER_THREADS"


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def random_ideal(rng: random.Random, dim: int, max_exp: int) -> MonomialIdeal:
    """Pure powers on every axis plus up to ``dim`` mixed generators."""
    gens = []
    for i in range(dim):
        gens.append(tuple(rng.randint(1, max_exp) if j == i else 0 for j in range(dim)))
    if dim >= 2:
        for _ in range(rng.randint(0, dim)):
            a, b = rng.sample(range(dim), 2)
            v = [rng.randint(0, max_exp) for _ in range(dim)]
            v[a] = max(v[a], 1)
            v[b] = max(v[b], 1)
            gens.append(tuple(v))
    return normalize(dim, gens)


def random_pair(seed: int, index: int, dim: int, max_exp: int) -> tuple[MonomialIdeal, MonomialIdeal]:
    rng = random.Random(f"{seed}:{index}")
    return random_ideal(rng, dim, max_exp), random_ideal(rng, dim, max_exp)


# ---------------------------------------------------------------------------
# properties: each returns None on success or a short failure description


def _prop_teissier_first(I, J):
    e = mixed_multiplicities(I, J)
    if not check_teissier_first(e).ok:
        return f"e = {list(e)}"


def _prop_teissier_second(I, J):
    e = mixed_multiplicities(I, J)
    if not check_teissier_second(e).ok:
        return f"e = {list(e)}"


def _prop_endpoints(I, J):
    e = mixed_multiplicities(I, J)
    if e[0] != multiplicity(I) or e[e.dim] != multiplicity(J):
        return f"e = {list(e)}, e(I) = {multiplicity(I)}, e(J) = {multiplicity(J)}"


def _prop_mixed_oracle(I, J):
    a, b = mixed_multiplicities(I, J), mixed_via_vandermonde(I, J)
    if a != b:
        return f"interpolation {list(a)} vs vandermonde {list(b)}"


def _prop_e1_squared(I, J):
    if not check_e1_squared(I, J).ok:
        return "e1^2 > e0 e2"


def _prop_double_bound(I, J):
    if not check_double_bound(I, J).ok:
        return "e(IJ) > 2e(I) + 2e(J)"


def _prop_equality(I, J):
    cert = equality_pipeline(I, J, strict=False)
    if not cert.agree:
        return str(cert.to_json())


def _prop_rees(I, J):
    # pure-power subideal and the intersection are both contained in I
    P = parameter_ideal(I.pure_powers())
    for sub in (P, intersect(I, J)):
        if is_subideal(sub, I) and not check_rees(sub, I).ok:
            return f"subideal ({format_ideal(sub)})"


def _prop_covolume(I, J):
    for K in (I, J):
        if multiplicity(K) != 2 * covolume_2d(K):
            return f"({format_ideal(K)})"


def _prop_dim1(I, J):
    if not check_dim1_additivity(I, J).ok:
        return "e(IJ) != e(I) + e(J)"


@dataclass(frozen=True)
class Property:
    name: str
    check: Callable
    dims: tuple[int, ...] = (1, 2, 3)


PROPERTIES = (
    Property("Teissier-1", _prop_teissier_first),
    Property("Teissier-2", _prop_teissier_second),
    Property("e1-squared", _prop_e1_squared, (2,)),
    Property("double-bound", _prop_double_bound, (2,)),
    Property("endpoints", _prop_endpoints),
    Property("mixed-oracle", _prop_mixed_oracle, (1, 2)),
    Property("equality-pipeline", _prop_equality),
    Property("Rees", _prop_rees),
    Property("covolume", _prop_covolume, (2,)),
    Property("dim1-additivity", _prop_dim1, (1,)),
)


def properties_for(dim: int) -> list[Property]:
    return [p for p in PROPERTIES if dim in p.dims]


def _run_pair(args) -> dict:
    seed, index, dim, max_exp = args
    I, J = random_pair(seed, index, dim, max_exp)
    failures = {}
    for prop in properties_for(dim):
        try:
            msg = prop.check(I, J)
        except Exception as exc:  # a crash inside a property is reported like a violation
            msg = f"{type(exc).__name__}: {exc}"
        if msg is not None:
            failures[prop.name] = msg
    try:
        e = list(mixed_multiplicities(I, J))
    except Exception:
        e = None
    return {"index": index, "I": ideal_to_json(I), "J": ideal_to_json(J), "e": e, "failures": failures}


def sweep(seed: int, count: int, dim: int, max_exp: int, workers: int | None = None) -> dict:
    if count < 1:
        raise ValueError("count must be at least 1")
    if dim not in (1, 2, 3):
        raise ValueError("dim must be 1, 2 or 3")
    if not 1 <= max_exp <= 8:
        raise ValueError("max_exp must be between 1 and 8")
    workers = worker_count() if workers is None else workers
    jobs = [(seed, i, dim, max_exp) for i in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            pairs = list(pool.map(_run_pair, jobs, chunksize=max(1, count // (4 * workers))))
    else:
        pairs = [_run_pair(job) for job in jobs]

    names = [p.name for p in properties_for(dim)]
    violations = [
        {"seed": seed, "index": pair["index"], "property": name, "detail": msg}
        for pair in pairs
        for name, msg in pair["failures"].items()
    ]
    bad = {name: sum(1 for v in violations if v["property"] == name) for name in names}
    clean = sum(1 for pair in pairs if not pair["failures"])
    if violations:
        summary = f"{clean}/{count} pairs clean; violations: " + ", ".join(
            f"{n} ({k})" for n, k in bad.items() if k
        )
    else:
        summary = f"{count}/{count} pairs: " + ", ".join(names) + " all hold"
    return {
        "seed": seed,
        "count": count,
        "dim": dim,
        "max_exp": max_exp,
        "properties": names,
        "violations": violations,
        "summary": summary,
        "pairs": pairs,
    }
