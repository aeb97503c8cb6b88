"""Buchberger's algorithm over Q with the sugar selection strategy.

Only global (polynomial ring) questions go through here: elimination and the
torus-emptiness test used for Newton non-degeneracy.  Local-ring questions are
answered by :mod:`qhodge.localring`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import Polynomial, as_fraction, grevlex_key


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"
    weights: Optional[tuple] = None
    split: Optional[int] = None

    def __post_init__(self):
        if self.kind not in ("grevlex", "weighted-grevlex", "elimination"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted-grevlex":
            if not self.weights or any(as_fraction(w) <= 0 for w in self.weights):
                raise ValueError("weighted-grevlex needs positive weights")
            object.__setattr__(self, "weights", tuple(as_fraction(w) for w in self.weights))
        if self.kind == "elimination" and (self.split is None or self.split < 1):
            raise ValueError("elimination order needs a block split index >= 1")

    def key(self, e):
        if self.kind == "grevlex":
            return grevlex_key(e)
        if self.kind == "weighted-grevlex":
            return (sum(w * a for w, a in zip(self.weights, e)), grevlex_key(e))
        k = self.split
        return (grevlex_key(e[:k]), grevlex_key(e[k:]))


GREVLEX = MonomialOrder()


def leading_exponent(p: Polynomial, order: MonomialOrder = GREVLEX):
    return max(p.terms, key=order.key)


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    return p.scale(1 / p.terms[leading_exponent(p, order)])


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    generators: tuple

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].degree() == 0

    def leading_exponents(self):
        return [leading_exponent(g, self.order) for g in self.generators]


def _reduce(p: Polynomial, basis: Sequence[Polynomial], leads: Sequence, order: MonomialOrder) -> Polynomial:
    n = p.n
    terms = dict(p.terms)
    remainder = {}
    while terms:
        lt = max(terms, key=order.key)
        c = terms[lt]
        for g, lg in zip(basis, leads):
            if _divides(lg, lt):
                shift = tuple(x - y for x, y in zip(lt, lg))
                factor = c / g.terms[lg]
                for e, a in g.terms.items():
                    e2 = tuple(x + y for x, y in zip(e, shift))
                    s = terms.get(e2, 0) - factor * a
                    if s:
                        terms[e2] = s
                    else:
                        terms.pop(e2, None)
                break
        else:
            remainder[lt] = c
            del terms[lt]
    return Polynomial._raw(n, remainder)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Remainder of multivariate division by ``gb``; zero iff p is in the ideal."""
    if gb.generators and p.n != gb.generators[0].n:
        raise ValueError("ambient mismatch")
    return _reduce(p, gb.generators, gb.leading_exponents(), gb.order)


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis(order, ())
    n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators live in different rings")

    G: list[Polynomial] = []
    leads: list = []
    sugar: list[int] = []
    pairs: set = set()

    def add(p: Polynomial, s: int):
        p = _monic(p, order)
        lp = leading_exponent(p, order)
        idx = len(G)
        G.append(p)
        leads.append(lp)
        sugar.append(s)
        for j in range(idx):
            pairs.add((j, idx))

    for g in sorted(gens, key=lambda q: order.key(leading_exponent(q, order))):
        r = _reduce(g, G, leads, order)
        if not r.is_zero():
            add(r, g.degree())

    def pair_sugar(pair):
        i, j = pair
        l = _lcm(leads[i], leads[j])
        d = sum(l)
        return max(sugar[i] + d - sum(leads[i]), sugar[j] + d - sum(leads[j]))

    while pairs:
        pair = min(pairs, key=lambda pr: (pair_sugar(pr), order.key(_lcm(leads[pr[0]], leads[pr[1]])), pr))
        pairs.discard(pair)
        i, j = pair
        li, lj = leads[i], leads[j]
        l = _lcm(li, lj)
        # product criterion
        if all(min(a, b) == 0 for a, b in zip(li, lj)):
            continue
        # chain criterion
        if any(
            k not in (i, j)
            and _divides(leads[k], l)
            and (min(i, k), max(i, k)) not in pairs
            and (min(j, k), max(j, k)) not in pairs
            for k in range(len(G))
        ):
            continue
        s = (G[i].mul_monomial(tuple(a - b for a, b in zip(l, li)))
             - G[j].mul_monomial(tuple(a - b for a, b in zip(l, lj))))
        r = _reduce(s, G, leads, order)
        if not r.is_zero():
            add(r, pair_sugar(pair))
            if r.degree() == 0:
                break

    # minimize, then inter-reduce
    keep = []
    for idx, lp in enumerate(leads):
        if any(
            _divides(leads[o], lp) and (leads[o] != lp or o < idx)
            for o in range(len(G)) if o != idx
        ):
            continue
        keep.append(idx)
    basis = [G[i] for i in keep]
    blead = [leads[i] for i in keep]
    reduced = []
    for idx, g in enumerate(basis):
        lp = blead[idx]
        lead_term = Polynomial._raw(n, {lp: g.terms[lp]})
        tail = _reduce(g - lead_term, basis[:idx] + basis[idx + 1:],
                       blead[:idx] + blead[idx + 1:], order)
        reduced.append(_monic(lead_term + tail, order))
    reduced.sort(key=lambda q: order.key(leading_exponent(q, order)), reverse=True)
    return GroebnerBasis(order, tuple(reduced))


def torus_saturation_is_empty(gens: Sequence[Polynomial]) -> bool:
    """True iff the gens have no common zero with all coordinates nonzero.

    Adjoins a variable t and the relation t*x_1*...*x_n - 1 (Rabinowitsch);
    the torus zero set is empty exactly when the extended ideal is (1).
    """
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one polynomial")
    n = gens[0].n
    lifted = [Polynomial._raw(n + 1, {e + (0,): c for e, c in g.terms.items()}) for g in gens]
    rab = Polynomial._raw(n + 1, {(1,) * (n + 1): Fraction(1), (0,) * (n + 1): Fraction(-1)})
    return buchberger(lifted + [rab]).is_unit()
