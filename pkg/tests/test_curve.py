from __future__ import annotations

import json

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidmon.curve import CurveError, CurvePoly, ParseError, X, Y
from support import EXAMPLE_1, EXAMPLE_2


def test_parse_example_1_matches_sympy():
    c = CurvePoly.parse(EXAMPLE_1)
    ref = (3 * X + 2 * Y + 1) ** 2 * (2 * X + Y + 1) - (5 * X + 3 * Y + 1) ** 3
    # normalised monic in y: the y^3 coefficient of ref is 4 - 27 = -23
    assert sympy.expand(c.poly.as_expr() * -23 - ref) == 0
    assert c.n == 3


def test_parse_rationals_and_juxtaposition():
    c = CurvePoly.parse(EXAMPLE_2)
    ref = (X**2 - (Y + sympy.Rational(3, 4)) ** 2 - 1) * ((X - sympy.Rational(1, 2)) ** 2 - Y**2 - 1)
    assert sympy.expand(c.poly.as_expr() - ref) == 0
    assert c.n == 4


@pytest.mark.parametrize("text", ["x^2-(y+3/4)^2-1)*(y", "(y^2-x", "y^2 $ x", "y^", "y/x"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        CurvePoly.parse(text)


@pytest.mark.parametrize("text", ["x^2+1", "x*y^2+1", "0"])
def test_curve_errors(text):
    with pytest.raises(CurveError):
        CurvePoly.parse(text)


def test_fiber_coefficients():
    c = CurvePoly.parse("y^2-x")
    assert list(c.fiber_coeffs(4.0)) == [1.0, 0.0, -4.0]
    assert c.evaluate(4.0, 2.0) == 0


def test_discriminant():
    c = CurvePoly.parse("y^2-x")
    assert sympy.Poly(c.discriminant, X).as_expr() == 4 * X


def test_json_echo_is_exact():
    c = CurvePoly.parse(EXAMPLE_2)
    data = json.loads(json.dumps(c.to_json()))
    back = CurvePoly.from_json(data)
    assert back.poly == c.poly
    assert data["source"] == EXAMPLE_2


coeff = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2), coeff), max_size=6))
def test_json_round_trip_random(terms):
    expr = Y**3 + sum(sympy.Rational(c.numerator, c.denominator) * X**i * Y**j for i, j, c in terms)
    c = CurvePoly.from_expr(expr)
    assert CurvePoly.from_json(json.dumps(c.to_json())).poly == c.poly
