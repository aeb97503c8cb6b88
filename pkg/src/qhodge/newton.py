"""Newton polyhedra of polynomials with exact rational geometry.

Compact facets of N(f) + R^n_+ are exactly the facets with a strictly
positive normal B (scaled so <A, B> = 1 on the facet).  They are found by
solving <A, B> = 1 on every n-subset of N(f) and keeping the solutions that
are positive and satisfy <A, B> >= 1 on all of N(f).  Lower-dimensional
compact faces are the faces of those facets, enumerated recursively inside
each facet's affine hull.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import _linalg
from .errors import NewtonPreconditionError
from .groebner import torus_saturation_is_empty
from .poly import Polynomial, as_fraction, format_rational, grevlex_key, partial_derivative
from .weights import MonomialIdealGens, minimal_monomials

MAX_VARIABLES = 4
MAX_POINTS = 24


@dataclass(frozen=True)
class Facet:
    normal: tuple
    support: tuple  # indices into NewtonPolyhedron.points

    @property
    def size(self) -> Fraction:
        """|B_F|, the sum of the normal's entries."""
        return sum(self.normal, Fraction(0))

    def pairing(self, e) -> Fraction:
        return sum((b * a for b, a in zip(self.normal, e)), Fraction(0))


@dataclass(frozen=True)
class Face:
    support: tuple
    dimension: int


@dataclass(frozen=True)
class NewtonPolyhedron:
    n: int
    points: tuple
    facets: tuple
    faces: tuple
    convenient: bool

    def face_points(self, face: Face):
        return [self.points[i] for i in face.support]

    def require_convenient(self):
        if not self.convenient or not self.facets:
            raise NewtonPreconditionError("Newton polyhedron is not convenient")


def _affine_rank(points) -> int:
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return _linalg.rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def _faces_of(points: dict, support: frozenset, memo: dict) -> set:
    """All nonempty faces (as index sets) of conv(points[support])."""
    if support in memo:
        return memo[support]
    pts = sorted(support)
    d = _affine_rank([points[i] for i in pts])
    found = {support}
    if d > 0:
        p0 = points[pts[0]]
        diffs = [[Fraction(a - b) for a, b in zip(points[i], p0)] for i in pts[1:]]
        V = _linalg.rref(diffs)[0][:d]
        for combo in itertools.combinations(pts, d):
            q = [points[i] for i in combo]
            if _affine_rank(q) != d - 1:
                continue
            W = [[Fraction(a - b) for a, b in zip(p, q[0])] for p in q[1:]]
            gram = [[sum(x * y for x, y in zip(v, wv)) for v in V] for wv in W]
            null = _linalg.nullspace(gram, d)
            if len(null) != 1:
                continue
            lam = null[0]
            c = [sum(l * v[k] for l, v in zip(lam, V)) for k in range(len(p0))]
            h = {i: sum(ci * (a - b) for ci, a, b in zip(c, points[i], q[0])) for i in pts}
            if all(v >= 0 for v in h.values()) or all(v <= 0 for v in h.values()):
                sub = frozenset(i for i, v in h.items() if v == 0)
                found |= _faces_of(points, sub, memo)
    memo[support] = found
    return found


def build_polyhedron(f: Polynomial, max_variables: int = MAX_VARIABLES,
                     max_points: int = MAX_POINTS) -> NewtonPolyhedron:
    if f.is_zero() or f.constant_term():
        raise NewtonPreconditionError("f must be nonzero and vanish at the origin")
    n = f.n
    if n > max_variables:
        raise NewtonPreconditionError(f"{n} variables exceeds the cap of {max_variables}")
    points = tuple(sorted(f.terms, key=grevlex_key))
    if len(points) > max_points:
        raise NewtonPreconditionError(f"{len(points)} exponents exceeds the cap of {max_points}")

    facets = {}
    for combo in itertools.combinations(range(len(points)), n):
        A = [list(points[i]) for i in combo]
        try:
            B = _linalg.solve(A, [1] * n)
        except ValueError:
            continue
        if any(b <= 0 for b in B):
            continue
        vals = [sum(b * a for b, a in zip(B, p)) for p in points]
        if any(v < 1 for v in vals):
            continue
        support = tuple(i for i, v in enumerate(vals) if v == 1)
        facets.setdefault(support, Facet(tuple(B), support))
    facet_list = tuple(sorted(facets.values(), key=lambda F: tuple(-b for b in F.normal)))

    memo: dict = {}
    index_points = dict(enumerate(points))
    face_sets = set()
    for F in facet_list:
        face_sets |= _faces_of(index_points, frozenset(F.support), memo)
    faces = tuple(sorted(
        (Face(tuple(sorted(s)), _affine_rank([points[i] for i in sorted(s)])) for s in face_sets),
        key=lambda fc: (fc.dimension, fc.support),
    ))

    axis = [any(p[i] > 0 and sum(p) == p[i] for p in points) for i in range(n)]
    return NewtonPolyhedron(n, points, facet_list, faces, all(axis) and bool(facet_list))


def is_convenient(np_: NewtonPolyhedron) -> bool:
    return np_.convenient


def face_restriction(f: Polynomial, np_: NewtonPolyhedron, face: Face) -> Polynomial:
    return f.restrict(np_.face_points(face))


def face_system(f: Polynomial, np_: NewtonPolyhedron, face: Face) -> list[Polynomial]:
    """x_i * d_i(f|_F) for every i, zero entries dropped."""
    g = face_restriction(f, np_, face)
    out = []
    for i in range(1, f.n + 1):
        d = partial_derivative(g, i).mul_monomial(tuple(int(j == i - 1) for j in range(f.n)))
        if not d.is_zero():
            out.append(d)
    return out


def face_verdicts(np_: NewtonPolyhedron, f: Polynomial) -> list[tuple[Face, bool]]:
    np_.require_convenient()
    return [(face, torus_saturation_is_empty(face_system(f, np_, face))) for face in np_.faces]


def is_nondegenerate(np_: NewtonPolyhedron, f: Polynomial) -> bool:
    return all(ok for _, ok in face_verdicts(np_, f))


def rho_hat(p: Polynomial, np_: NewtonPolyhedron):
    np_.require_convenient()
    if p.is_zero():
        return math.inf
    return min(min(F.pairing(e) for e in p.terms) for F in np_.facets)


def rho_tilde(p: Polynomial, np_: NewtonPolyhedron):
    np_.require_convenient()
    if p.is_zero():
        return math.inf
    return min(F.size + min(F.pairing(e) for e in p.terms) for F in np_.facets)


def rho_tilde_monomial(e, np_: NewtonPolyhedron) -> Fraction:
    return min(F.size + F.pairing(e) for F in np_.facets)


def tilde_filtration_generators(c, np_: NewtonPolyhedron) -> MonomialIdealGens:
    """Monomial generators of the ideal {u : rho_tilde(u) >= c}."""
    np_.require_convenient()
    c = as_fraction(c)
    n = np_.n
    if c <= min(F.size for F in np_.facets):
        return MonomialIdealGens(n, ((0,) * n,))
    caps = [max(0, max(math.ceil((c - F.size) / F.normal[i]) for F in np_.facets))
            for i in range(n)]
    gens = minimal_monomials(n, caps, lambda e: rho_tilde_monomial(e, np_) >= c)
    return MonomialIdealGens(n, gens)


def truncate_degree_for_newton(c, np_: NewtonPolyhedron) -> int:
    """Smallest M >= 1 with m^M inside {rho_tilde >= c}."""
    np_.require_convenient()
    c = as_fraction(c)
    return max(1, max(math.ceil((c - F.size) / min(F.normal)) for F in np_.facets))


def report(np_: NewtonPolyhedron, f: Optional[Polynomial] = None) -> dict:
    """JSON-ready description of the polyhedron and, given f, its face checks."""
    out = {
        "points": [list(p) for p in np_.points],
        "facets": [
            {"normal": [format_rational(b) for b in F.normal],
             "size": format_rational(F.size),
             "support": list(F.support)}
            for F in np_.facets
        ],
        "convenient": np_.convenient,
    }
    if f is not None and np_.convenient:
        verdicts = face_verdicts(np_, f)
        out["nondegenerate"] = all(ok for _, ok in verdicts)
        out["faces"] = [
            {"support": list(face.support), "dimension": face.dimension, "nondegenerate": ok}
            for face, ok in verdicts
        ]
    else:
        out["nondegenerate"] = None
        out["faces"] = [{"support": list(face.support), "dimension": face.dimension}
                        for face in np_.faces]
    return out
