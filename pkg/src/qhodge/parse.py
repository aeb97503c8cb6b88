"""Reader for polynomial expressions and rational scalars.

Grammar (explicit ``*`` only, no implicit multiplication)::

    expr  := term (("+" | "-") term)*
    term  := unary ("*" unary)*
    unary := ("+" | "-") unary | power
    power := atom ("^" INTEGER)*
    atom  := NUMBER | IDENT | "(" expr ")"

NUMBER is ``digits`` or ``digits/digits``; IDENT is an ASCII identifier that
must be one of the context's variable names.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .poly import Polynomial

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_RATIONAL = re.compile(r"([+-]?)([0-9]+)(?:/([0-9]+))?\Z")
_TOKEN = re.compile(r"([0-9]+(?:/[0-9]+)?)|([A-Za-z_][A-Za-z0-9_]*)|(.)")


class ParseError(ValueError):
    """Malformed input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


@dataclass(frozen=True)
class VariableContext:
    names: tuple

    def __init__(self, names):
        if isinstance(names, str):
            names = [s.strip() for s in names.split(",")]
        names = tuple(names)
        if not names:
            raise ValueError("need at least one variable")
        for s in names:
            if not isinstance(s, str) or not s.isascii() or not _IDENT.match(s):
                raise ValueError(f"invalid variable name {s!r}")
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        object.__setattr__(self, "names", names)

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)


def parse_rational(text: str) -> Fraction:
    s = text.strip()
    m = _RATIONAL.match(s)
    if not m:
        raise ParseError(f"malformed rational {text!r}", 0)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ParseError("zero denominator", s.index("/") + 1)
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        num, ident, other = m.groups()
        if num is not None:
            tokens.append(("num", num, pos))
        elif ident is not None:
            tokens.append(("ident", ident, pos))
        elif other not in "+-*^()":
            raise ParseError(f"unexpected character {other!r}", pos)
        else:
            tokens.append((other, other, pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: VariableContext):
        self.ctx = ctx
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.take()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, got {tok[1] or 'end of input'!r}", tok[2])
        return tok

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        while self.peek()[0] == "^":
            self.take()
            tok = self.peek()
            if tok[0] == "-":
                raise ParseError("negative exponent", tok[2])
            if tok[0] != "num":
                raise ParseError("exponent must be a non-negative integer literal", tok[2])
            self.take()
            if "/" in tok[1]:
                raise ParseError("non-integer exponent", tok[2])
            base = base ** int(tok[1])
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            try:
                return Polynomial.constant(self.ctx.n, parse_rational(value))
            except ParseError as exc:
                raise ParseError(exc.message, pos + exc.position) from None
        if kind == "ident":
            if value not in self.ctx.names:
                raise ParseError(f"unknown identifier {value!r}", pos)
            return Polynomial.variable(self.ctx.n, self.ctx.index(value))
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected token {value!r}", pos)


def parse_polynomial(text: str, ctx: VariableContext) -> Polynomial:
    if not text.strip():
        raise ParseError("empty input", 0)
    p = _Parser(text, ctx)
    result = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
    return result


def render(p: Polynomial, ctx: VariableContext) -> str:
    return p.render(ctx.names)
