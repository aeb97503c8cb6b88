from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qhodge import Polynomial, VariableContext, parse_polynomial

XY = VariableContext("x,y")
XYZ = VariableContext("x,y,z")

# the weighted homogeneous corpus used throughout the suite
CORPUS = {
    "x^2+y^3": XY,
    "x^2+y^5": XY,
    "x^2+y^4": XY,
    "x^3+y^4": XY,
    "x^2+y^3+z^5": XYZ,
}


def poly(text: str, ctx: VariableContext = XY) -> Polynomial:
    return parse_polynomial(text, ctx)


def farey(q: int) -> list[Fraction]:
    return sorted({Fraction(p, r) for r in range(1, q + 1) for p in range(1, r + 1)})


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polynomials(draw, n: int = 2, max_degree: int = 3, max_terms: int = 4):
    size = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(size):
        e = tuple(draw(st.integers(0, max_degree)) for _ in range(n))
        terms[e] = draw(rationals)
    return Polynomial(n, terms)


@st.composite
def monomials(draw, n: int = 2, max_degree: int = 4):
    return Polynomial.monomial(tuple(draw(st.integers(0, max_degree)) for _ in range(n)))


@pytest.fixture
def cusp():
    return poly("x^2+y^3")


@pytest.fixture
def a4():
    return poly("x^2+y^5")
