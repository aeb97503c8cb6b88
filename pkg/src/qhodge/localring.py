"""Exact linear algebra in truncations O/m^P of the local ring.

An ideal I of O = C{x_1..x_n} that contains a power m^M of the maximal ideal
is determined by its image in O/m^P for any P > M.  We store that image for
P = M + 1 as an echelon basis of sparse rational vectors; the extra degree
lets the containment m^M ⊆ I be checked by Nakayama's lemma
(m^M ⊆ I + m^{M+1} implies m^M ⊆ I) instead of being taken on trust.

Once one side of a comparison is certified, every relation between images
is the relation between the ideals themselves.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import NotIsolated
from .poly import Polynomial, gradient, grevlex_key
from .weights import WeightData, rho


def monomials_of_degree(n: int, d: int):
    """Exponents of total degree d, ascending grevlex."""
    out = []
    for cut in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        e = []
        for c in cut:
            e.append(c - prev - 1)
            prev = c
        e.append(d + n - 1 - prev - 1)
        out.append(tuple(e))
    return sorted(out, key=grevlex_key)


def monomials_below(n: int, M: int):
    """All exponents of total degree < M, ascending grevlex."""
    return [e for d in range(M) for e in monomials_of_degree(n, d)]


def count_below(n: int, M: int) -> int:
    return math.comb(M + n - 1, n) if M > 0 else 0


class _Span:
    """Echelon basis of a subspace of Q[x]/m^P.

    Each row is keyed by its lead exponent, the term of lowest degree
    (ties broken by grevlex), and is scaled so the lead coefficient is 1.
    """

    __slots__ = ("rows",)

    def __init__(self, rows=None):
        self.rows = dict(rows) if rows else {}

    def copy(self) -> _Span:
        return _Span(self.rows)

    @staticmethod
    def _lead(v):
        return min(v, key=lambda e: (sum(e), grevlex_key(e)))

    def reduce(self, v: dict) -> dict:
        v = dict(v)
        rows = self.rows
        while v:
            lead = self._lead(v)
            row = rows.get(lead)
            if row is None:
                return v
            c = v[lead]
            for e, a in row.items():
                s = v.get(e, 0) - c * a
                if s:
                    v[e] = s
                else:
                    del v[e]
        return v

    def insert(self, v: dict) -> Optional[dict]:
        """Add v if independent; returns the stored row or None."""
        r = self.reduce(v)
        if not r:
            return None
        lead = self._lead(r)
        inv = 1 / r[lead]
        r = {e: a * inv for e, a in r.items()}
        self.rows[lead] = r
        return r

    def __contains__(self, v: dict) -> bool:
        return not self.reduce(v)

    def __len__(self) -> int:
        return len(self.rows)

    def lead_degree_counts(self):
        counts = {}
        for e in self.rows:
            d = sum(e)
            counts[d] = counts.get(d, 0) + 1
        return counts


def _truncated_terms(p: Polynomial, P: int) -> dict:
    return {e: c for e, c in p.terms.items() if sum(e) < P}


def _reduce_fully(v: dict, rows: dict) -> dict:
    """Eliminate every term of v that is the lead of some row."""
    v = dict(v)
    while True:
        hit = next((e for e in v if e in rows), None)
        if hit is None:
            return v
        c = v[hit]
        for e, a in rows[hit].items():
            s = v.get(e, 0) - c * a
            if s:
                v[e] = s
            else:
                del v[e]


def _close(span: _Span, n: int, P: int, pending: list) -> None:
    """Grow ``span`` to the smallest x-stable subspace containing ``pending``."""
    while pending:
        v = pending.pop()
        row = span.insert(v)
        if row is None:
            continue
        for i in range(n):
            shifted = {}
            for e, a in row.items():
                if sum(e) + 1 < P:
                    e2 = e[:i] + (e[i] + 1,) + e[i + 1:]
                    shifted[e2] = a
            if shifted:
                pending.append(shifted)


class TruncatedIdeal:
    """The local ideal generated by ``generators``, seen modulo m^(M+1).

    ``certified`` records whether m^M ⊆ I was verified.  Comparisons and
    membership questions need at least one certified operand.
    """

    def __init__(self, generators: Sequence[Polynomial], M: int, n: Optional[int] = None,
                 _span: Optional[_Span] = None):
        gens = [g for g in generators]
        if n is None:
            if not gens:
                raise ValueError("ambient dimension needed for an empty generator list")
            n = gens[0].n
        if any(g.n != n for g in gens):
            raise ValueError("generators live in different rings")
        if M < 0:
            raise ValueError("truncation degree must be non-negative")
        self.n = n
        self.M = M
        self.precision = M + 1
        self.generators = tuple(gens)
        span = _span.copy() if _span is not None else _Span()
        _close(span, n, self.precision,
               [t for t in (_truncated_terms(g, self.precision) for g in gens) if t])
        self._span = span
        self._certified = None

    # construction helpers

    def with_generators(self, extra: Iterable[Polynomial]) -> TruncatedIdeal:
        extra = list(extra)
        return TruncatedIdeal(list(self.generators) + extra, self.M, self.n, _span=self._span)

    def add(self, g: Polynomial) -> bool:
        """Mutating incremental insert used while a generating set is assembled.

        Returns whether g enlarged the ideal.
        """
        t = _truncated_terms(g, self.precision)
        if not t or t in self._span:
            return False
        self.generators = self.generators + (g,)
        _close(self._span, self.n, self.precision, [t])
        self._certified = None
        return True

    # queries

    def _contains_terms(self, terms: dict) -> bool:
        return terms in self._span

    @property
    def dimension(self) -> int:
        """dim_C of the image of I in O/m^(M+1)."""
        return len(self._span)

    @property
    def codimension(self) -> int:
        """dim_C O/(I + m^(M+1))."""
        return count_below(self.n, self.precision) - len(self._span)

    @property
    def certified(self) -> bool:
        if self._certified is None:
            self._certified = self.contains_power_of_maximal(self.M)
        return self._certified

    def contains_power_of_maximal(self, m: int) -> bool:
        if m > self.M:
            raise ValueError("cannot decide beyond the truncation degree")
        return all({e: Fraction(1)} in self._span for e in monomials_of_degree(self.n, m))

    def require_certified(self) -> None:
        if not self.certified:
            raise ValueError(
                f"ideal does not contain m^{self.M}; raise the truncation degree")

    def contains(self, p: Polynomial) -> bool:
        if p.n != self.n:
            raise ValueError("ambient mismatch")
        self.require_certified()
        return self._contains_terms(_truncated_terms(p, self.precision))

    def __contains__(self, p: Polynomial) -> bool:
        return self.contains(p)

    def order(self) -> int:
        """Smallest m-adic order of an element of I (0 for the unit ideal)."""
        if not self._span.rows:
            return self.precision
        return min(sum(e) for e in self._span.rows)

    def subset_of(self, other: TruncatedIdeal) -> bool:
        """Image containment; exact when ``other`` is certified or when both
        images coincide with a certified side."""
        _check_compatible(self, other)
        return all(row in other._span for row in self._span.rows.values())

    def minimal_generators(self) -> list[Polynomial]:
        """A canonical minimal generating set, read off the reduced echelon basis.

        Rows are chosen by increasing lead and kept when independent modulo
        m*I; their number is dim I/mI.  Requires certification so that the
        rows really generate I.
        """
        self.require_certified()
        rows = self._span.rows
        reduced = {}
        for lead, row in rows.items():
            tail = {e: a for e, a in row.items() if e != lead}
            tail = _reduce_fully(tail, rows)
            tail[lead] = Fraction(1)
            reduced[lead] = tail
        shifted = []
        for row in reduced.values():
            for i in range(self.n):
                v = {e[:i] + (e[i] + 1,) + e[i + 1:]: a for e, a in row.items()
                     if sum(e) + 1 < self.precision}
                if v:
                    shifted.append(v)
        work = _Span()
        _close(work, self.n, self.precision, shifted)
        chosen = []
        for lead in sorted(reduced, key=lambda e: (sum(e), grevlex_key(e))):
            if work.insert(reduced[lead]) is not None:
                chosen.append(lead)
        chosen.sort(key=lambda e: (sum(e), tuple(-a for a in grevlex_key(e)[1])))
        return [Polynomial(self.n, reduced[e]) for e in chosen]

    def basis_rows(self):
        return [Polynomial(self.n, row) for _, row in sorted(self._span.rows.items())]

    def __repr__(self):
        return f"TruncatedIdeal(n={self.n}, M={self.M}, gens={len(self.generators)}, dim={self.dimension})"


def _check_compatible(I: TruncatedIdeal, J: TruncatedIdeal):
    if I.n != J.n:
        raise ValueError("ideals live in different rings")
    if I.M != J.M:
        raise ValueError(f"mismatched truncation degrees {I.M} and {J.M}")


EQUAL = "equal"
LEFT_IN_RIGHT = "left-in-right"
RIGHT_IN_LEFT = "right-in-left"
INCOMPARABLE = "incomparable"


def compare(I: TruncatedIdeal, J: TruncatedIdeal) -> str:
    _check_compatible(I, J)
    if not (I.certified or J.certified):
        raise ValueError(f"neither ideal is known to contain m^{I.M}")
    a = I.subset_of(J)
    b = J.subset_of(I)
    if a and b:
        return EQUAL
    if a:
        return LEFT_IN_RIGHT
    if b:
        return RIGHT_IN_LEFT
    return INCOMPARABLE


def membership(p: Polynomial, I: TruncatedIdeal) -> bool:
    return I.contains(p)


def is_power_of_maximal(I: TruncatedIdeal) -> Optional[int]:
    """m if I equals m^m in the local ring, else None."""
    I.require_certified()
    d = I.order()
    if d > I.M:
        return None
    return d if I.contains_power_of_maximal(d) else None


def truncate_degree_for(c, w: WeightData) -> int:
    """Smallest M >= 1 with m^M ⊆ O^{>=c}."""
    c = Fraction(c)
    return max(1, math.ceil((c - w.sigma) / min(w.w)))


def maximal_power(n: int, m: int, M: int) -> TruncatedIdeal:
    return TruncatedIdeal([Polynomial.monomial(e) for e in monomials_of_degree(n, m)], M, n)


@dataclass(frozen=True)
class JacobianData:
    basis: tuple
    milnor_number: int
    weights: Optional[tuple] = None
    stable_degree: int = 0

    def basis_polynomials(self) -> list[Polynomial]:
        return [Polynomial.monomial(e) for e in self.basis]


def jacobian_data(f: Polynomial, w: Optional[WeightData] = None, cap: int = 40) -> JacobianData:
    """Monomial basis and dimension of the Milnor algebra O/(d_1 f, ..., d_n f).

    The series D(M) = dim O/(J + m^M) is nondecreasing and D(M) = D(M+1)
    exactly when m^M ⊆ J + m^(M+1), i.e. m^M ⊆ J; the first flat step thus
    certifies both finiteness and the value μ = D(M).
    """
    if f.constant_term():
        raise ValueError("f must vanish at the origin")
    n = f.n
    grads = gradient(f)
    if any(g.constant_term() for g in grads):
        raise NotIsolated("f is smooth at the origin (a partial derivative is a unit)")
    P = 4
    while True:
        P = min(P, cap)
        span = _Span()
        _close(span, n, P, [t for t in (_truncated_terms(g, P) for g in grads) if t])
        M = next((m for m in range(1, P)
                  if all({e: Fraction(1)} in span for e in monomials_of_degree(n, m))), None)
        if M is not None:
            break
        if P >= cap:
            raise NotIsolated(f"not isolated (dimension still growing at cap M_max={cap})")
        P *= 2
    chosen = []
    work = span.copy()
    for e in monomials_below(n, M):
        if work.insert({e: Fraction(1)}) is not None:
            chosen.append(e)
    weights = tuple(rho(Polynomial.monomial(e), w) for e in chosen) if w is not None else None
    return JacobianData(tuple(chosen), len(chosen), weights, M)
