import itertools
import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from teissier.core import IdealError, normalize
from teissier.io import fraction_json, ideal_from_json, ideal_to_json, parse_ideal, parse_text
from teissier.linalg import SingularSystemError, solve
from teissier.simplex import feasible_point

from .strategies import m_primary_ideals


# --- parsing --------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, dim, gens",
    [
        ("x^2, x*y, y^3", None, {(2, 0), (1, 1), (0, 3)}),
        ("x, y, z^2", None, {(1, 0, 0), (0, 1, 0), (0, 0, 2)}),
        ("x1^2, x2*x4, x3, x4^5", None, {(2, 0, 0, 0), (0, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 5)}),
        ("x", 2, {(1, 0)}),
        ("x*x*y^2", 2, {(2, 2)}),
        ("1", 2, {(0, 0)}),
    ],
)
def test_parse_text(text, dim, gens):
    assert set(parse_text(text, dim).gens) == gens


@pytest.mark.parametrize("text", ["", "x,,y", "x^", "w^2", "x^-1", "2*x", "x0"])
def test_parse_text_errors(text):
    with pytest.raises(IdealError):
        parse_text(text)


def test_variable_beyond_dimension():
    with pytest.raises(IdealError):
        parse_text("x, z", dim=2)


def test_json_forms(tmp_path):
    I = parse_text("x^2, x*y, y^3")
    doc = ideal_to_json(I)
    assert doc == {"dim": 2, "gens": [[0, 3], [1, 1], [2, 0]]}
    assert ideal_from_json(doc) == I
    assert parse_ideal(json.dumps(doc)) == I
    path = tmp_path / "ideal.json"
    path.write_text(json.dumps(doc))
    assert parse_ideal(str(path)) == I
    (tmp_path / "ideal.txt").write_text("x^2, x*y, y^3\n")
    assert parse_ideal(str(tmp_path / "ideal.txt")) == I


@pytest.mark.parametrize(
    "source",
    ['{"dim": 2}', '{"dim": 2, "gens": [[1, true]]}', '{"dim": "2", "gens": [[1, 0]]}', "{not json", '{"dim": 2, "gens": [1]}'],
)
def test_json_errors(source):
    with pytest.raises(IdealError):
        parse_ideal(source)


def test_json_dimension_must_match():
    with pytest.raises(IdealError):
        parse_ideal('{"dim": 2, "gens": [[1, 0], [0, 1]]}', dim=3)


def test_fraction_json():
    assert fraction_json(Fraction(-6, 4)) == {"num": -3, "den": 2}


@settings(max_examples=100, deadline=None)
@given(m_primary_ideals())
def test_json_round_trip(I):
    assert ideal_from_json(json.loads(json.dumps(ideal_to_json(I)))) == I


# --- exact linear algebra ---------------------------------------------------------


def test_solve_small_system():
    assert solve([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
    assert solve([[0, 1], [1, 0]], [2, 3]) == [3, 2]
    assert solve([[Fraction(1, 2)]], [Fraction(1, 3)]) == [Fraction(2, 3)]


def test_solve_rejects_bad_systems():
    with pytest.raises(SingularSystemError):
        solve([[1, 2], [2, 4]], [1, 2])
    with pytest.raises(ValueError):
        solve([[1, 2]], [1])


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(st.integers(-20, 20), min_size=n, max_size=n),
)))
def test_solve_matches_sympy(system):
    A, b = system
    M = sympy.Matrix(A)
    if M.det() == 0:
        with pytest.raises(SingularSystemError):
            solve(A, b)
        return
    expected = list(M.LUsolve(sympy.Matrix(b)))
    assert [sympy.Rational(x.numerator, x.denominator) for x in solve(A, b)] == expected


# --- phase-1 simplex ------------------------------------------------------------


def test_feasible_point_simple():
    x = feasible_point([[1, 1]], [1])
    assert x is not None and sum(x) == 1 and all(v >= 0 for v in x)
    assert feasible_point([[1, 1]], [-1]) is None
    assert feasible_point([[1, 0], [1, 0]], [1, 2]) is None


def test_feasible_point_degenerate_cycling_example():
    # a classic degenerate system where textbook pivoting can cycle
    A = [[Fraction(1, 4), -8, -1, 9, 1, 0, 0], [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0], [0, 0, 1, 0, 0, 0, 1]]
    x = feasible_point(A, [0, 0, 1])
    assert x is not None
    for row, rhs in zip(A, [0, 0, 1]):
        assert sum(Fraction(a) * v for a, v in zip(row, x)) == rhs


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda m: st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
    st.lists(st.integers(-4, 4), min_size=m, max_size=m),
))))
def test_feasible_point_against_vertex_enumeration(system):
    A, b = system
    m, n = len(A), len(A[0])
    x = feasible_point(A, b)
    if x is not None:
        assert all(v >= 0 for v in x)
        assert all(sum(a * v for a, v in zip(row, x)) == rhs for row, rhs in zip(A, b))
        return
    # if feasible, some basic solution exists: try every column subset
    for k in range(0, min(m, n) + 1):
        for cols in itertools.combinations(range(n), k):
            M = sympy.Matrix([[row[c] for c in cols] for row in A]) if k else sympy.zeros(m, 0)
            rhs = sympy.Matrix(b)
            if k == 0:
                assert any(v != 0 for v in b)
                continue
            try:
                sol, params = M.gauss_jordan_solve(rhs)
            except ValueError:
                continue
            sol = sol.subs({p: 0 for p in params})
            assert not all(v >= 0 for v in sol), f"missed feasible point on columns {cols}"
