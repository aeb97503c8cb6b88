"""Hodge ideals I_k(alpha Z) for weighted homogeneous and Newton
non-degenerate isolated singularities.

Two independent constructions are provided.  The recursive one builds
I_{k+1} from generators of I_k::

    I_0     = O^{>=alpha}
    I_{k+1} = ideal( v_j with rho(v_j) >= alpha+k+1,
                     f d_i g - (alpha+k) g d_i f,
                     f g                              : g in gens(I_k) )

where the v_j are the Milnor-algebra basis monomials.  The direct one expands
the whole filtration at level k: generators

    f^(k-i-m) T_{j_m, alpha+i+m-1} ... T_{j_1, alpha+i}(v),   v in gens O^{>=alpha+i},

with T_{j,c}(g) = f d_j g - c g d_j f, i.e. an order-m operator applied to
v / f^(i+1) * f^(1-alpha) and cleared against f^(k+1).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import InvariantBreach, NewtonPreconditionError, PreconditionError
from .localring import (
    EQUAL,
    LEFT_IN_RIGHT,
    JacobianData,
    TruncatedIdeal,
    compare,
    jacobian_data,
    truncate_degree_for,
)
from .newton import (
    NewtonPolyhedron,
    build_polyhedron,
    is_nondegenerate,
    tilde_filtration_generators,
    truncate_degree_for_newton,
)
from .poly import Polynomial, as_fraction, twisted_derivation
from .weights import WeightData, detect_weights, filtration_generators, validate_weights

WEIGHTED = "weighted"
NEWTON = "newton"


@dataclass(frozen=True)
class QDivisor:
    """D = alpha * Z with Z = (f = 0) and 0 < alpha <= 1."""

    f: Polynomial
    alpha: Fraction
    weights: Optional[WeightData] = None
    polyhedron: Optional[NewtonPolyhedron] = None
    jacobian: Optional[JacobianData] = None

    @classmethod
    def weighted(cls, f: Polynomial, alpha, weights=None) -> QDivisor:
        alpha = _check_alpha(alpha)
        w = detect_weights(f) if weights is None else validate_weights(f, weights)
        return cls(f, alpha, weights=w, jacobian=jacobian_data(f, w))

    @classmethod
    def newton(cls, f: Polynomial, alpha, polyhedron: Optional[NewtonPolyhedron] = None) -> QDivisor:
        alpha = _check_alpha(alpha)
        np_ = polyhedron or build_polyhedron(f)
        if not np_.convenient:
            raise NewtonPreconditionError("f is not convenient")
        if not is_nondegenerate(np_, f):
            raise NewtonPreconditionError("degenerate Newton boundary")
        return cls(f, alpha, polyhedron=np_, jacobian=jacobian_data(f))

    def with_alpha(self, alpha) -> QDivisor:
        return QDivisor(self.f, _check_alpha(alpha), self.weights, self.polyhedron, self.jacobian)

    @property
    def mode(self) -> str:
        return WEIGHTED if self.weights is not None else NEWTON

    @property
    def n(self) -> int:
        return self.f.n

    def require_weighted(self, what: str):
        if self.weights is None:
            raise PreconditionError(f"{what} needs a weighted homogeneous divisor")

    def filtration(self, c) -> list[Polynomial]:
        """Monomial generators of O^{>=c} (or its Newton analogue)."""
        if self.weights is not None:
            return filtration_generators(c, self.weights).polynomials()
        return tilde_filtration_generators(c, self.polyhedron).polynomials()

    def truncation_degree(self, c) -> int:
        if self.weights is not None:
            return truncate_degree_for(c, self.weights)
        return truncate_degree_for_newton(c, self.polyhedron)

    def basis_above(self, c) -> list[Polynomial]:
        """Milnor basis monomials v_j with rho(v_j) >= c."""
        self.require_weighted("the Milnor-basis part")
        return [v for v, r in zip(self.jacobian.basis_polynomials(), self.jacobian.weights) if r >= c]


def _check_alpha(alpha) -> Fraction:
    alpha = as_fraction(alpha)
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must satisfy 0 < alpha <= 1, got {alpha}")
    return alpha


@dataclass
class HodgeChain:
    divisor: QDivisor
    ideals: list
    method: str
    M: int

    def __getitem__(self, k) -> TruncatedIdeal:
        return self.ideals[k]

    def __len__(self):
        return len(self.ideals)

    def check_decreasing(self) -> list[bool]:
        return [compare(self.ideals[k + 1], self.ideals[k]) in (EQUAL, LEFT_IN_RIGHT)
                for k in range(len(self.ideals) - 1)]

    def check_filtration_containment(self) -> list[bool]:
        d = self.divisor
        return [TruncatedIdeal(d.filtration(d.alpha + k), self.M, d.n).subset_of(I)
                for k, I in enumerate(self.ideals)]


def _certify(I: TruncatedIdeal, label: str) -> TruncatedIdeal:
    if not I.certified:
        raise InvariantBreach(f"{label} does not contain m^{I.M}; truncation unsound")
    return I


def _new_ideal(n: int, M: int) -> TruncatedIdeal:
    return TruncatedIdeal([], M, n)


def one_step_generators(d: QDivisor, gens, c) -> list[Polynomial]:
    """T(g, c, i) for every generator and direction, then f * g."""
    out = []
    for g in gens:
        for i in range(1, d.n + 1):
            out.append(twisted_derivation(g, d.f, c, i))
    out.extend(d.f * g for g in gens)
    return out


def hodge_ideal_recursive(d: QDivisor, k: int, M: Optional[int] = None) -> HodgeChain:
    d.require_weighted("the recursive Hodge-ideal formula")
    if k < 0:
        raise ValueError("k must be non-negative")
    M = M if M is not None else d.truncation_degree(d.alpha + k)
    P = M + 1
    I0 = TruncatedIdeal(d.filtration(d.alpha), M, d.n)
    ideals = [_certify(I0, "I_0")]
    for j in range(k):
        prev = ideals[-1]
        nxt = _new_ideal(d.n, M)
        c = d.alpha + j
        for g in one_step_generators(d, prev.generators, c):
            nxt.add(g.truncate(P))
        for v in d.basis_above(d.alpha + j + 1):
            nxt.add(v)
        ideals.append(_certify(nxt, f"I_{j + 1}"))
    return HodgeChain(d, ideals, "recursive", M)


def _direct_level(d: QDivisor, k: int, M: int) -> TruncatedIdeal:
    P = M + 1
    f = d.f
    fpow = [Polynomial.constant(d.n, 1)]
    for _ in range(k):
        fpow.append((fpow[-1] * f).truncate(P))
    I = _new_ideal(d.n, M)
    for i in range(k + 1):
        # stage m holds T-words of length m applied to generators of O^{>=alpha+i};
        # derivations commute, so nondecreasing index words suffice
        stage = [((), v) for v in d.filtration(d.alpha + i)]
        for m in range(k - i + 1):
            for _, g in stage:
                I.add((fpow[k - i - m] * g).truncate(P))
            if m == k - i:
                break
            c = d.alpha + i + m
            nxt = []
            for word, g in stage:
                start = word[-1] if word else 1
                for j in range(start, d.n + 1):
                    h = twisted_derivation(g, f, c, j).truncate(P)
                    if not h.is_zero():
                        nxt.append((word + (j,), h))
            stage = nxt
    return _certify(I, f"I_{k} (direct)")


def hodge_ideal_direct(d: QDivisor, k: int, M: Optional[int] = None) -> HodgeChain:
    if k < 0:
        raise ValueError("k must be non-negative")
    M = M if M is not None else d.truncation_degree(d.alpha + k)
    return HodgeChain(d, [_direct_level(d, j, M) for j in range(k + 1)], "direct", M)


def generating_level_formula(d: QDivisor) -> int:
    """floor(n - sum(w) - alpha)."""
    if d.weights is None:
        raise NewtonPreconditionError("the generating-level formula needs weighted mode")
    return math.floor(d.n - d.weights.sigma - d.alpha)


@dataclass
class GeneratingLevel:
    level: int
    chain: HodgeChain
    one_step_equal: dict = field(default_factory=dict)  # q -> I_q == J_q


def one_step_ideals(chain: HodgeChain) -> list[TruncatedIdeal]:
    """J_q for q = 1..K: I_{q-1} pushed through order-one operators only."""
    d = chain.divisor
    P = chain.M + 1
    out = []
    for j in range(len(chain) - 1):
        J = _new_ideal(d.n, chain.M)
        for g in one_step_generators(d, chain[j].generators, d.alpha + j):
            J.add(g.truncate(P))
        out.append(J)
    return out


def generating_level_empirical(d: QDivisor, k_max: int) -> GeneratingLevel:
    d.require_weighted("the empirical generating level")
    chain = hodge_ideal_recursive(d, k_max)
    eq = {}
    for q, J in enumerate(one_step_ideals(chain), start=1):
        eq[q] = compare(chain[q], J) == EQUAL
    level = k_max
    while level > 0 and eq[level]:
        level -= 1
    return GeneratingLevel(level, chain, eq)
