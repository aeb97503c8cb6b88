from fractions import Fraction

import pytest
from hypothesis import given

from qhodge import ParseError, Polynomial, VariableContext, parse_polynomial, parse_rational, render

from conftest import XY, polynomials


def test_cusp():
    f = parse_polynomial("x^2 + y^3", XY)
    assert f == Polynomial(2, {(2, 0): 1, (0, 3): 1})


def test_zero():
    assert parse_polynomial("0", XY).is_zero()


def test_three_terms():
    f = parse_polynomial("x^2*y^2 + x^5 + y^5", XY)
    assert len(f) == 3


def test_parentheses_and_powers():
    f = parse_polynomial("(x+y)^2 - 2*x*y", XY)
    assert f == parse_polynomial("x^2+y^2", XY)
    assert parse_polynomial("-(x)^2^2", XY) == parse_polynomial("-x^4", XY)


def test_rationals():
    assert parse_rational("9/10") == Fraction(9, 10)
    assert parse_rational("1") == 1
    assert parse_rational("-2/4") == Fraction(-1, 2)
    with pytest.raises(ParseError):
        parse_rational("1/0")
    with pytest.raises(ParseError):
        parse_rational("0.5")


@pytest.mark.parametrize("text, offset", [
    ("x^-1", 2),
    ("x^(2)", 2),
    ("x^1/2", 2),
    ("w", 0),
    ("x +", 3),
    ("x y", 2),
    ("x # y", 2),
    ("", 0),
    ("x + 1/0", 6),
    ("(x", 2),
])
def test_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, XY)
    assert info.value.position == offset


def test_implicit_multiplication_is_an_identifier():
    with pytest.raises(ParseError, match="unknown identifier"):
        parse_polynomial("xy", XY)


def test_variable_context_validation():
    with pytest.raises(ValueError):
        VariableContext("x,x")
    with pytest.raises(ValueError):
        VariableContext("x,é")
    with pytest.raises(ValueError):
        VariableContext("1x")
    assert VariableContext(["a", "b1"]).n == 2


@given(polynomials(max_degree=4, max_terms=5))
def test_round_trip(p):
    text = render(p, XY)
    q = parse_polynomial(text, XY)
    assert q == p
    assert render(q, XY) == text
