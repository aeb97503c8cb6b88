"""Exact Hodge ideals, microlocal ideals and Bernstein–Sato polynomials of
Q-divisors alpha*Z along isolated weighted homogeneous or Newton
non-degenerate hypersurface singularities."""

from .bernstein import BSPolynomial, JumpData, assemble_bs, bs_polynomial, jump_data, microlocal_jumps_check
from .errors import (
    InvariantBreach,
    NewtonPreconditionError,
    NotIsolated,
    NotWeightedHomogeneous,
    PreconditionError,
)
from .groebner import GroebnerBasis, MonomialOrder, buchberger, normal_form, torus_saturation_is_empty
from .hodge import (
    QDivisor,
    generating_level_empirical,
    generating_level_formula,
    hodge_ideal_direct,
    hodge_ideal_recursive,
)
from .localring import (
    EQUAL,
    INCOMPARABLE,
    LEFT_IN_RIGHT,
    RIGHT_IN_LEFT,
    JacobianData,
    TruncatedIdeal,
    compare,
    is_power_of_maximal,
    jacobian_data,
    membership,
)
from .microlocal import ComparisonReport, compare_chains, conjecture_sweep, microlocal_ideal
from .newton import NewtonPolyhedron, build_polyhedron, is_nondegenerate, rho_hat, rho_tilde
from .parse import ParseError, VariableContext, parse_polynomial, parse_rational, render
from .poly import Polynomial, gradient, partial_derivative, twisted_derivation
from .weights import WeightData, detect_weights, filtration_generators, rho
