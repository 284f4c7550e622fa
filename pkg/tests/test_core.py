import random

import pytest
from hypothesis import given, settings, strategies as st

from teissier.core import (
    IdealError,
    NotMPrimaryError,
    colength,
    colon,
    contains_monomial,
    frobenius_power,
    intersect,
    is_subideal,
    maximal_ideal,
    normalize,
    parameter_ideal,
    power,
    product,
    unit_ideal,
)
from teissier.io import parse_text as P

from . import oracles
from .strategies import exponent_vectors, m_primary_ideals


def gens(I):
    return set(I.gens)


@pytest.mark.parametrize(
    "raw, expected",
    [
        ([(2, 0), (3, 1), (0, 1)], {(2, 0), (0, 1)}),
        ([(1, 0)], {(1, 0)}),
        ([(2, 1), (1, 2), (2, 2)], {(2, 1), (1, 2)}),
    ],
)
def test_normalize(raw, expected):
    assert gens(normalize(2, raw)) == expected


def test_normalize_errors():
    with pytest.raises(IdealError):
        normalize(2, [])
    with pytest.raises(IdealError):
        normalize(2, [(1, 0, 0)])
    with pytest.raises(IdealError):
        normalize(2, [(-1, 0)])


@pytest.mark.parametrize("p, expected", [((2, 5), True), ((1, 2), False), ((0, 3), True)])
def test_contains_monomial(p, expected):
    assert contains_monomial(P("x^2, y^3"), p) is expected


def test_contains_monomial_dimension_mismatch():
    with pytest.raises(IdealError):
        contains_monomial(P("x^2, y^3"), (1, 1, 1))


def test_product_examples():
    assert gens(product(P("x", dim=2), P("y", dim=2))) == {(1, 1)}
    assert gens(product(P("x,y"), P("x^2,y^3"))) == {(3, 0), (2, 1), (1, 3), (0, 4)}
    assert gens(product(P("x,y"), P("x,y"))) == {(2, 0), (1, 1), (0, 2)}
    with pytest.raises(IdealError):
        product(P("x,y"), P("x,y,z"))


def test_power_examples():
    assert gens(power(P("x,y"), 2)) == {(2, 0), (1, 1), (0, 2)}
    assert gens(power(P("x^2,y^3"), 2)) == {(4, 0), (2, 3), (0, 6)}
    assert power(P("x^2,y^3"), 0) == unit_ideal(2)
    assert power(P("x^2,y^3"), 0).is_unit


def test_intersect_examples():
    assert gens(intersect(P("x", dim=2), P("y", dim=2))) == {(1, 1)}
    assert gens(intersect(P("x^2,y"), P("x,y^2"))) == {(2, 0), (1, 1), (0, 2)}
    I = P("x^2, x*y^2, y^5")
    assert intersect(I, I) == I


def test_colon_examples():
    assert colon(P("x^2, x*y"), P("x", dim=2)) == P("x, y")
    assert gens(colon(P("x^3, y^3"), P("x, y"))) == {(3, 0), (2, 2), (0, 3)}
    I = P("x^2, x*y, y^3")
    assert colon(I, unit_ideal(2)) == I


def test_frobenius_power_examples():
    assert frobenius_power(P("x^2, y^3"), 2) == P("x^4, y^6")
    assert frobenius_power(P("x, y"), 3) == P("x^3, y^3")
    I = P("x^2, x*y, y^3")
    assert frobenius_power(I, 1) == I


@pytest.mark.parametrize("text, expected", [("x,y", 1), ("x^2, x*y, y^3", 4), ("x^2, y^3", 6)])
def test_colength_examples(text, expected):
    I = P(text)
    assert colength(I) == expected
    assert colength(I, "bruteforce") == expected
    assert oracles.box_colength(gens(I)) == expected


def test_colength_requires_m_primary():
    with pytest.raises(NotMPrimaryError):
        colength(P("x^2, x*y"))


def test_unit_ideal_colength():
    assert colength(unit_ideal(3)) == 0


def test_m_primary_flag():
    assert P("x^2, y^3").is_m_primary
    assert not P("x^2, x*y").is_m_primary
    assert maximal_ideal(3).is_m_primary


# --- property tests ---------------------------------------------------------

@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.lists(exponent_vectors(d), min_size=1, max_size=8)),
       st.randoms(use_true_random=False))
def test_normalize_preserves_ideal(raw, rnd):
    d = len(raw[0])
    I = normalize(d, raw)
    assert gens(I) == oracles.minimal(raw)
    assert normalize(d, I.gens) == I
    for _ in range(50):
        p = tuple(rnd.randint(0, 8) for _ in range(d))
        assert contains_monomial(I, p) == oracles.in_ideal(raw, p)


@settings(max_examples=150, deadline=None)
@given(m_primary_ideals())
def test_sliced_matches_bruteforce(I):
    assert colength(I, "sliced") == colength(I, "bruteforce") == oracles.box_colength(gens(I))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(m_primary_ideals(d, 4), m_primary_ideals(d, 4))))
def test_product_and_monotonicity(pair):
    I, K = pair
    IK = product(I, K)
    assert gens(IK) == oracles.mul(gens(I), gens(K))
    # IK is inside I, so its colength is at least as large
    assert is_subideal(IK, I)
    assert colength(IK) >= colength(I)
    inter = intersect(I, K)
    assert is_subideal(inter, I) and is_subideal(inter, K)
    assert colength(inter) >= max(colength(I), colength(K))


@settings(max_examples=80, deadline=None)
@given(m_primary_ideals(hi=4), st.integers(1, 4))
def test_frobenius_inside_power(I, n):
    F, Pn = frobenius_power(I, n), power(I, n)
    assert all(contains_monomial(Pn, g) for g in F.gens)
    assert gens(Pn) == oracles.pw(gens(I), n)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 6), min_size=1, max_size=3), st.integers(1, 4))
def test_parameter_ideal_colength(exps, n):
    I = parameter_ideal(exps)
    prod = 1
    for a in exps:
        prod *= a
    assert colength(I) == prod
    assert colength(frobenius_power(I, n)) == n ** len(exps) * prod


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 3).flatmap(lambda d: st.tuples(m_primary_ideals(d, 4), m_primary_ideals(d, 4))))
def test_colon_definition(pair):
    I, J = pair
    Q = colon(I, J)
    # f is in (I : J) iff f * g is in I for every generator g of J
    d = I.dim
    rnd = random.Random(0)
    for _ in range(40):
        p = tuple(rnd.randint(0, 6) for _ in range(d))
        expected = all(oracles.in_ideal(gens(I), tuple(a + b for a, b in zip(p, g))) for g in J.gens)
        assert contains_monomial(Q, p) == expected


def test_sliced_on_larger_products():
    m = maximal_ideal(3)
    J = parameter_ideal([3, 2, 3])
    big = product(power(m, 3), power(J, 2))
    assert colength(big) == colength(big, "bruteforce") == oracles.box_colength(gens(big))
