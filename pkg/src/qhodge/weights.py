"""Weighted homogeneity and the weight filtration O^{>=c}."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import _linalg
from .errors import NotWeightedHomogeneous
from .poly import Polynomial, as_fraction, euler_defect, grevlex_key


@dataclass(frozen=True)
class WeightData:
    w: tuple

    def __post_init__(self):
        w = tuple(as_fraction(v) for v in self.w)
        if not w:
            raise ValueError("empty weight vector")
        if any(v <= 0 for v in w):
            raise ValueError("weights must be strictly positive")
        object.__setattr__(self, "w", w)

    @property
    def n(self) -> int:
        return len(self.w)

    @property
    def sigma(self) -> Fraction:
        """Sum of the weights; the minimal exponent for weighted homogeneous f."""
        return sum(self.w, Fraction(0))

    def degree(self, exponent) -> Fraction:
        return sum((wi * a for wi, a in zip(self.w, exponent)), Fraction(0))

    def rho_monomial(self, exponent) -> Fraction:
        return self.sigma + self.degree(exponent)

    def __len__(self):
        return len(self.w)

    def __iter__(self):
        return iter(self.w)


@dataclass(frozen=True)
class MonomialIdealGens:
    """Divisibility-minimal monomial generators, sorted in grevlex order."""

    n: int
    generators: tuple

    def polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(e) for e in self.generators]

    def contains(self, exponent) -> bool:
        return any(all(a >= g for a, g in zip(exponent, gen)) for gen in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def detect_weights(f: Polynomial) -> WeightData:
    """Solve <A, w> = 1 over the exponents of f for a unique positive w."""
    if f.is_zero():
        raise ValueError("zero polynomial has no weights")
    if f.constant_term():
        raise ValueError("f must vanish at the origin")
    A = [list(e) for e in f.exponents()]
    try:
        w = _linalg.solve(A, [1] * len(A))
    except _linalg.Inconsistent:
        raise NotWeightedHomogeneous("inconsistent — f is not weighted homogeneous") from None
    except _linalg.Underdetermined:
        raise NotWeightedHomogeneous("underdetermined — supply weights explicitly") from None
    if any(v <= 0 for v in w):
        raise NotWeightedHomogeneous("weights are not all strictly positive")
    return WeightData(tuple(w))


def validate_weights(f: Polynomial, w) -> WeightData:
    """Accept an explicit weight vector if f is weighted homogeneous for it."""
    wd = w if isinstance(w, WeightData) else WeightData(tuple(w))
    if wd.n != f.n:
        raise ValueError("weight vector length differs from variable count")
    if not euler_defect(f, wd).is_zero():
        raise NotWeightedHomogeneous("f is not weighted homogeneous for the given weights")
    return wd


def rho(p: Polynomial, w: WeightData):
    """Weight of p: sigma + min <w, A> over its terms; +inf for p = 0."""
    if p.n != w.n:
        raise ValueError("ambient mismatch")
    if p.is_zero():
        return math.inf
    return w.sigma + min(w.degree(e) for e in p.terms)


def minimal_monomials(n: int, caps: Sequence[int], predicate) -> tuple:
    """Divisibility-minimal exponents inside the box ``caps`` where
    ``predicate`` holds.  ``predicate`` must be upward closed."""
    found = []
    for e in itertools.product(*(range(c + 1) for c in caps)):
        if not predicate(e):
            continue
        if any(e[i] and predicate(e[:i] + (e[i] - 1,) + e[i + 1:]) for i in range(n)):
            continue
        found.append(e)
    return tuple(sorted(found, key=grevlex_key))


def filtration_generators(c, w: WeightData) -> MonomialIdealGens:
    """Monomial generators of O^{>=c}."""
    c = as_fraction(c)
    if c <= w.sigma:
        return MonomialIdealGens(w.n, ((0,) * w.n,))
    caps = [max(0, math.ceil((c - w.sigma) / wi)) for wi in w.w]
    gens = minimal_monomials(w.n, caps, lambda e: w.rho_monomial(e) >= c)
    return MonomialIdealGens(w.n, gens)
