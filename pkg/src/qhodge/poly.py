"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in Q[x_1, ..., x_n] for a fixed ambient ``n`` and is stored
as a map from exponent tuples to nonzero :class:`fractions.Fraction`
coefficients.  Values are immutable; every operation returns a new object.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple  # tuple[int, ...] of length n


def as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact rational: {c!r}")


def grevlex_key(e: Exponent):
    """Sort key such that a larger key is a larger monomial in grevlex."""
    return (sum(e), tuple(-a for a in reversed(e)))


def format_rational(c: Fraction) -> str:
    c = as_fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def default_names(n: int) -> list[str]:
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


class Polynomial:
    """Element of Q[x_1, ..., x_n]."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponent, object] | None = None):
        if n < 1:
            raise ValueError("ambient variable count must be positive")
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(int(a) for a in e)
                if len(e) != n or any(a < 0 for a in e):
                    raise ValueError(f"bad exponent {e} for {n} variables")
                c = as_fraction(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> Polynomial:
        # terms must already be clean: tuples of length n, nonzero Fractions
        p = cls.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    # constructors

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c) -> Polynomial:
        c = as_fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def monomial(cls, exponent: Sequence[int], c=1) -> Polynomial:
        e = tuple(exponent)
        return cls(len(e), {e: c})

    @classmethod
    def variable(cls, n: int, i: int) -> Polynomial:
        """The coordinate x_i, with 0-based ``i``."""
        if not 0 <= i < n:
            raise IndexError(f"variable index {i} out of range for {n} variables")
        e = [0] * n
        e[i] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return self._terms

    def items(self):
        """Terms in descending grevlex order."""
        return sorted(self._terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def exponents(self) -> list[Exponent]:
        return [e for e, _ in self.items()]

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def order(self) -> int:
        """Lowest total degree of a term (the m-adic order); -1 for zero."""
        return min((sum(e) for e in self._terms), default=-1)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n, Fraction(0))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic

    def _check(self, other: Polynomial):
        if self.n != other.n:
            raise ValueError(f"ambient mismatch: {self.n} vs {other.n} variables")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.n, other)

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def scale(self, c) -> Polynomial:
        c = as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(self.n, {e: c * a for e, a in self._terms.items()})

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, exponent: Exponent, c=1) -> Polynomial:
        c = as_fraction(c)
        if not c:
            return Polynomial.zero(self.n)
        return Polynomial._raw(
            self.n,
            {tuple(a + b for a, b in zip(e, exponent)): c * a_ for e, a_ in self._terms.items()},
        )

    def truncate(self, M: int) -> Polynomial:
        """Drop every term of total degree >= M."""
        return Polynomial._raw(self.n, {e: c for e, c in self._terms.items() if sum(e) < M})

    def restrict(self, exponents: Iterable[Exponent]) -> Polynomial:
        """Keep only the terms whose exponents are listed."""
        keep = set(map(tuple, exponents))
        return Polynomial._raw(self.n, {e: c for e, c in self._terms.items() if e in keep})

    def monic(self, key=grevlex_key) -> Polynomial:
        if not self._terms:
            return self
        lead = max(self._terms, key=key)
        return self.scale(1 / self._terms[lead])

    def evaluate(self, point: Sequence) -> Fraction:
        point = [as_fraction(v) for v in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for v, a in zip(point, e):
                if a:
                    t *= v**a
            total += t
        return total

    # comparison

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # rendering

    def render(self, names: Sequence[str] | None = None) -> str:
        """Canonical text: descending grevlex terms, ``p/q`` coefficients."""
        names = list(names) if names is not None else default_names(self.n)
        if len(names) != self.n:
            raise ValueError("need one name per variable")
        if not self._terms:
            return "0"
        pieces = []
        for idx, (e, c) in enumerate(self.items()):
            mono = "*".join(
                name if a == 1 else f"{name}^{a}" for name, a in zip(names, e) if a
            )
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if idx == 0:
                pieces.append(body if sign == "+" else f"-{body}")
            else:
                pieces.append(f" {sign} {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({self.n}, {self.render()!r})"

    __str__ = render


def partial_derivative(p: Polynomial, i: int) -> Polynomial:
    """Formal partial derivative with respect to x_i (``i`` is 1-based)."""
    if not 1 <= i <= p.n:
        raise IndexError(f"variable index {i} out of range 1..{p.n}")
    j = i - 1
    out = {}
    for e, c in p.terms.items():
        a = e[j]
        if a:
            d = list(e)
            d[j] = a - 1
            out[tuple(d)] = c * a
    return Polynomial._raw(p.n, out)


def gradient(p: Polynomial) -> list[Polynomial]:
    return [partial_derivative(p, i) for i in range(1, p.n + 1)]


def euler_defect(f: Polynomial, w) -> Polynomial:
    """Return f - sum_i w_i x_i d_i f.

    Zero exactly when f is weighted homogeneous of weighted degree 1 for ``w``.
    ``w`` is a :class:`~qhodge.weights.WeightData` or a plain sequence.
    """
    w = getattr(w, "w", w)
    if len(w) != f.n:
        raise ValueError("weight vector length differs from variable count")
    out = {}
    for e, c in f.terms.items():
        s = 1 - sum(as_fraction(wi) * a for wi, a in zip(w, e))
        if s:
            out[e] = c * s
    return Polynomial._raw(f.n, out)


def twisted_derivation(a: Polynomial, f: Polynomial, c, i: int) -> Polynomial:
    """Return f * d_i(a) - c * a * d_i(f)."""
    a._check(f)
    return f * partial_derivative(a, i) - (a * partial_derivative(f, i)).scale(c)
