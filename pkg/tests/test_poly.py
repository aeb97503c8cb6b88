from fractions import Fraction

import pytest
from hypothesis import given

from qhodge import Polynomial, partial_derivative, twisted_derivation
from qhodge.poly import euler_defect, gradient

from conftest import polynomials, poly, rationals


def test_partial_of_cusp():
    assert partial_derivative(poly("x^2+y^3"), 1) == poly("2*x")
    assert partial_derivative(poly("x^2+y^3"), 2) == poly("3*y^2")


def test_partial_of_constant_is_zero():
    assert partial_derivative(Polynomial.constant(2, 5), 1).is_zero()


def test_partial_mixed():
    f = poly("x^2*y^2+x^5+y^5")
    assert partial_derivative(f, 2) == poly("2*x^2*y+5*y^4")


def test_partial_index_checked():
    with pytest.raises(IndexError):
        partial_derivative(poly("x"), 3)
    with pytest.raises(IndexError):
        partial_derivative(poly("x"), 0)


def test_euler_defect():
    assert euler_defect(poly("x^2+y^3"), (Fraction(1, 2), Fraction(1, 3))).is_zero()
    assert euler_defect(poly("x^2+y^5"), (Fraction(1, 2), Fraction(1, 5))).is_zero()
    assert not euler_defect(poly("x^2*y^2+x^5+y^5"), (Fraction(1, 5), Fraction(1, 5))).is_zero()


def test_twisted_derivation_examples():
    a = Fraction(3, 7)
    f = poly("x^2+y^3")
    assert twisted_derivation(Polynomial.constant(2, 1), f, a, 1) == poly("x").scale(-2 * a)
    g = poly("x^2+y^5")
    got = twisted_derivation(poly("x"), g, a, 1)
    assert got == poly("x^2").scale(1 - 2 * a) + poly("y^5")
    assert twisted_derivation(f, f, a, 2) == (f * partial_derivative(f, 2)).scale(1 - a)


def test_render_canonical():
    assert poly("y^3 + x^2").render() == "y^3 + x^2"
    assert poly("-x + 1/2").render() == "-x + 1/2"
    assert poly("3*x*y^2 - 2/3*y").render() == "3*x*y^2 - 2/3*y"
    assert Polynomial.zero(2).render() == "0"


def test_truncate_and_degree():
    p = poly("1 + x + x*y + y^3")
    assert p.truncate(2) == poly("1 + x")
    assert p.degree() == 3
    assert p.order() == 0


def test_ambient_mismatch_rejected():
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0): 1}) + Polynomial(3, {(1, 0, 0): 1})


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * (q * r) == (p * q) * r
    assert p + q == q + p
    assert p * q == q * p
    assert p - p == Polynomial.zero(2)


@given(polynomials(), polynomials())
def test_leibniz(p, q):
    for i in (1, 2):
        lhs = partial_derivative(p * q, i)
        assert lhs == p * partial_derivative(q, i) + q * partial_derivative(p, i)


@given(polynomials(max_terms=3), polynomials(max_terms=3), polynomials(max_terms=3), rationals)
def test_twisted_derivation_decomposition(a, b, f, c):
    for i in (1, 2):
        lhs = twisted_derivation(a * b, f, c, i)
        rhs = a * twisted_derivation(b, f, c, i) + b * f * partial_derivative(a, i)
        assert lhs == rhs


@given(polynomials())
def test_hash_consistent_with_eq(p):
    q = Polynomial(2, dict(p.terms))
    assert p == q and hash(p) == hash(q)


def test_gradient():
    assert gradient(poly("x^2+y^3")) == [poly("2*x"), poly("3*y^2")]
