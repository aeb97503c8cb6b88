from fractions import Fraction

import pytest
from hypothesis import given

from qhodge import NewtonPreconditionError, Polynomial, build_polyhedron, is_nondegenerate, jacobian_data, rho, rho_hat, rho_tilde
from qhodge.localring import monomials_below
from qhodge.newton import face_system, report, rho_tilde_monomial, tilde_filtration_generators
from qhodge.weights import WeightData, filtration_generators

from conftest import XYZ, farey, monomials, poly

F = Fraction
MIXED = "x^2*y^2+x^5+y^5"
W_A4 = WeightData((F(1, 2), F(1, 5)))


def _faces(np_):
    return {frozenset(np_.points[i] for i in face.support) for face in np_.faces}


def test_mixed_facets():
    np_ = build_polyhedron(poly(MIXED))
    assert {F_.normal for F_ in np_.facets} == {(F(1, 5), F(3, 10)), (F(3, 10), F(1, 5))}
    assert all(F_.size == F(1, 2) for F_ in np_.facets)
    assert np_.convenient


def test_mixed_faces_by_hand():
    np_ = build_polyhedron(poly(MIXED))
    expected = [[(0, 5)], [(2, 2)], [(5, 0)], [(0, 5), (2, 2)], [(2, 2), (5, 0)]]
    assert _faces(np_) == {frozenset(face) for face in expected}


def test_weighted_single_facet():
    np_ = build_polyhedron(poly("x^2+y^3"))
    assert [F_.normal for F_ in np_.facets] == [(F(1, 2), F(1, 3))]


@pytest.mark.parametrize("text", ["x^2", "x*y"])
def test_not_convenient(text):
    np_ = build_polyhedron(poly(text))
    assert not np_.convenient
    with pytest.raises(NewtonPreconditionError):
        is_nondegenerate(np_, poly(text))
    with pytest.raises(NewtonPreconditionError):
        rho_tilde(poly("x"), np_)


def test_convenient_examples():
    assert build_polyhedron(poly("x^2+y^5")).convenient


def test_nondegenerate_examples():
    assert is_nondegenerate(build_polyhedron(poly(MIXED)), poly(MIXED))
    assert is_nondegenerate(build_polyhedron(poly("x^2+y^3")), poly("x^2+y^3"))


def test_degenerate_face_identified():
    f = poly("(x+y)^2+x*z+z^2", XYZ)
    np_ = build_polyhedron(f)
    assert not is_nondegenerate(np_, f)
    rep = report(np_, f)
    bad = [tuple(tuple(np_.points[i]) for i in face["support"]) for face in rep["faces"] if not face["nondegenerate"]]
    # the edge through (2,0,0), (1,1,0), (0,2,0), where f restricts to (x+y)^2
    assert bad == [((0, 2, 0), (1, 1, 0), (2, 0, 0))]
    assert len(_faces(np_)) == 7


def test_face_system_of_mixed_edge():
    f = poly(MIXED)
    np_ = build_polyhedron(f)
    face = next(fc for fc in np_.faces if set(np_.face_points(fc)) == {(5, 0), (2, 2)})
    assert sorted(g.render() for g in face_system(f, np_, face)) == ["2*x^2*y^2", "5*x^5 + 2*x^2*y^2"]


def test_caps():
    with pytest.raises(NewtonPreconditionError):
        build_polyhedron(Polynomial(5, {(2, 0, 0, 0, 0): 1}))
    with pytest.raises(NewtonPreconditionError):
        build_polyhedron(Polynomial.zero(2))


def test_rho_tilde_values():
    np_ = build_polyhedron(poly(MIXED))
    assert rho_tilde(Polynomial.constant(2, 1), np_) == F(1, 2)
    assert rho_tilde(Polynomial.zero(2), np_) == float("inf")
    assert sorted(g.render() for g in tilde_filtration_generators(F(1, 2), np_).polynomials()) == ["1"]
    assert sorted(g.render() for g in tilde_filtration_generators(F(51, 100), np_).polynomials()) == ["x", "y"]


def test_weighted_case_coincides():
    np_ = build_polyhedron(poly("x^2+y^5"))
    for e in monomials_below(2, 9):
        m = Polynomial.monomial(e)
        assert rho_tilde(m, np_) == rho(m, W_A4)
    for c in farey(10) + [F(3, 2), F(2), F(12, 5)]:
        assert set(tilde_filtration_generators(c, np_)) == set(filtration_generators(c, W_A4))


def test_convenient_nondegenerate_is_isolated():
    assert jacobian_data(poly(MIXED)).milnor_number == 11


@pytest.mark.parametrize("text, ctx", [(MIXED, None), ("x^2+y^5", None), ("(x+y)^2+x*z+z^2", XYZ),
                                       ("x^4+x^2*y+y^4+x*y^2", None)])
def test_facet_inequalities_and_face_closure(text, ctx):
    f = poly(text, ctx) if ctx else poly(text)
    np_ = build_polyhedron(f)
    for F_ in np_.facets:
        vals = [F_.pairing(p) for p in np_.points]
        assert all(v >= 1 for v in vals)
        assert {i for i, v in enumerate(vals) if v == 1} == set(F_.support)
    supports = {frozenset(fc.support) for fc in np_.faces}
    for a in supports:
        for b in supports:
            if a & b:
                assert a & b in supports


@given(monomials())
def test_rho_tilde_is_shifted_rho_hat(m):
    np_ = build_polyhedron(poly(MIXED))
    assert rho_tilde(m, np_) == rho_hat(m * poly("x*y"), np_)
    assert rho_tilde_monomial(next(iter(m.terms)), np_) == rho_tilde(m, np_)
