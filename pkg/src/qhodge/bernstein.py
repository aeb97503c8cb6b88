"""Bernstein–Sato polynomials of weighted homogeneous isolated singularities.

Three routes lead to b_f, and they are kept independent so that they can be
checked against each other:

* the product formula over the distinct Milnor-basis weights,
  b_f(s) = (s+1) prod_{rho in E} (s+rho);
* the assembly from jumping numbers E_k of O^{>=k+c}/(df) in (0,1) and the
  jumping coefficients N;
* the assembly from the jumps c_1 < ... < c_m of the microlocal filtration
  on O/(df), b_f(s) = (s+1) prod (s+c_i).

The second and third routes never look at E directly: they scan the
dimension function lambda -> #{j : rho(v_j) >= lambda} on a lattice fine
enough to separate every weight, or optionally the dimensions of the actual
quotient ideals (O^{>=lambda} + (df))/(df) built in the local ring.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .localring import JacobianData, TruncatedIdeal, jacobian_data, truncate_degree_for
from .poly import Polynomial, format_rational, gradient
from .weights import WeightData, detect_weights, filtration_generators, validate_weights


@dataclass(frozen=True)
class BSPolynomial:
    """Monic product of factors (s + r); ``roots`` stores the values r."""

    roots: tuple

    def __post_init__(self):
        roots = tuple(sorted(Fraction(r) for r in self.roots))
        if any(r <= 0 for r in roots):
            raise ValueError("factors (s+r) need r > 0")
        object.__setattr__(self, "roots", roots)

    @property
    def degree(self) -> int:
        return len(self.roots)

    def factors(self) -> list[tuple[Fraction, int]]:
        """(r, multiplicity) with the (s+1) factor first, then increasing r."""
        counts = Counter(self.roots)
        order = sorted(counts, key=lambda r: (r != 1, r))
        return [(r, counts[r]) for r in order]

    def render(self) -> str:
        out = []
        for r, m in self.factors():
            out.append(f"(s+{format_rational(r)})" + (f"^{m}" if m > 1 else ""))
        return "".join(out)

    def coefficients(self) -> list[Fraction]:
        """Expanded coefficients, constant term first."""
        coeffs = [Fraction(1)]
        for r in self.roots:
            nxt = [Fraction(0)] * (len(coeffs) + 1)
            for i, c in enumerate(coeffs):
                nxt[i] += r * c
                nxt[i + 1] += c
            coeffs = nxt
        return coeffs

    def __call__(self, s) -> Fraction:
        return math.prod((Fraction(s) + r for r in self.roots), start=Fraction(1))

    def to_json(self) -> dict:
        return {
            "factors": [{"root": format_rational(-r), "multiplicity": m} for r, m in self.factors()],
            "rendered": self.render(),
        }


def _weights(f: Polynomial, w) -> WeightData:
    return detect_weights(f) if w is None else validate_weights(f, w)


def _weighted_jacobian(f: Polynomial, w) -> tuple[WeightData, JacobianData]:
    w = _weights(f, w)
    return w, jacobian_data(f, w)


def bs_polynomial(f: Polynomial, w=None, jacobian: Optional[JacobianData] = None) -> BSPolynomial:
    """(s+1) times (s+rho) over the distinct basis weights."""
    if jacobian is None:
        w, jacobian = _weighted_jacobian(f, w)
    return BSPolynomial((Fraction(1),) + tuple(sorted(set(jacobian.weights))))


@dataclass(frozen=True)
class JumpData:
    E: tuple
    E_k: dict  # k -> tuple of jumping numbers in (0, 1)
    N: tuple
    microlocal_jumps: tuple
    n: int
    sigma: Fraction

    @property
    def top_level(self) -> int:
        """[n - alpha_f]; E_k is empty above it."""
        return math.floor(self.n - self.sigma)

    def to_json(self) -> dict:
        def fr(xs):
            return [format_rational(x) for x in xs]

        return {
            "E": fr(self.E),
            "E_k": {str(k): fr(v) for k, v in sorted(self.E_k.items())},
            "N": fr(self.N),
            "microlocal_jumps": fr(self.microlocal_jumps),
        }


def _lattice_denominator(w: WeightData) -> int:
    return math.lcm(*(x.denominator for x in w.w))


def _count_dimension(weights) -> Callable[[Fraction], int]:
    ws = list(weights)
    return lambda lam: sum(1 for r in ws if r >= lam)


def _ideal_dimension(f: Polynomial, w: WeightData, mu: int) -> Callable[[Fraction], int]:
    """dim (O^{>=lam} + (df)) / (df), computed in the local ring."""
    grads = gradient(f)
    cache = {}

    def dim(lam):
        if lam not in cache:
            M = truncate_degree_for(lam, w)
            I = TruncatedIdeal(filtration_generators(lam, w).polynomials() + grads, M, f.n)
            I.require_certified()
            cache[lam] = mu - I.codimension
        return cache[lam]

    return dim


def jump_data(f: Polynomial, w=None, jacobian: Optional[JacobianData] = None,
              via_ideals: bool = False) -> JumpData:
    """Jumping numbers and coefficients from the dimension function alone.

    With ``via_ideals`` the dimensions come from the quotient ideals
    themselves rather than from the counted basis weights.
    """
    if jacobian is None:
        w, jacobian = _weighted_jacobian(f, w)
    else:
        w = _weights(f, w)
    n = f.n
    D = _lattice_denominator(w)
    eps = Fraction(1, D)
    dim = _ideal_dimension(f, w, jacobian.milnor_number) if via_ideals else _count_dimension(jacobian.weights)

    # every weight lies in sigma + (1/D)Z, so eps separates neighbouring
    # candidates and a drop between lam and lam+eps is a jump at lam
    def drops(lam) -> bool:
        return dim(lam) != dim(lam + eps)

    def lattice(lo, hi):
        t = math.floor((lo - w.sigma) * D) + 1
        while (lam := w.sigma + Fraction(t, D)) <= hi:
            if lam > lo:
                yield lam
            t += 1

    top = math.floor(n - w.sigma)
    E_k = {k: tuple(lam - k for lam in lattice(k, k + 1) if lam < k + 1 and drops(lam))
           for k in range(top + 1)}
    N = tuple(Fraction(r) for r in range(top + 1) if drops(Fraction(r + 1)))
    jumps = tuple(lam for lam in lattice(0, n) if drops(lam))
    return JumpData(
        E=tuple(sorted(set(jacobian.weights))),
        E_k=E_k,
        N=N,
        microlocal_jumps=jumps,
        n=n,
        sigma=w.sigma,
    )


def assemble_bs(jd: JumpData) -> BSPolynomial:
    """(s+1) prod_k prod_{c in E_k} (s+c+k) prod_{r in N} (s+r+1)."""
    roots = [Fraction(1)]
    roots += [c + k for k, cs in jd.E_k.items() for c in cs]
    roots += [r + 1 for r in jd.N]
    return BSPolynomial(tuple(roots))


def microlocal_assembly(jd: JumpData) -> BSPolynomial:
    return BSPolynomial((Fraction(1),) + jd.microlocal_jumps)


def microlocal_jumps_check(jd: JumpData, w, n: int, bs: Optional[BSPolynomial] = None) -> bool:
    """Endpoint identities c_1 = sum(w), c_m = n - sum(w), and agreement of
    (s+1) prod (s+c_i) with the product formula."""
    sigma = sum((Fraction(x) for x in w), Fraction(0))
    c = jd.microlocal_jumps
    if not c or c[0] != sigma or c[-1] != n - sigma:
        return False
    target = bs if bs is not None else BSPolynomial((Fraction(1),) + jd.E)
    return microlocal_assembly(jd) == target
