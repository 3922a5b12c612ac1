"""Recursive-descent parser for polynomial text.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('-' | '+') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | IDENT | '(' expr ')'
    NUMBER := INT ('/' INT)?

Multiplication must be written explicitly; ``2x`` is a syntax error.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .poly import Polynomial


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class PolySyntaxError(ParseError):
    pass


class UndeclaredVariableError(ParseError):
    pass


class ExponentError(ParseError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\s*/\s*\d+)?)|(?P<ident>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()/]))")


def tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
            break
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.vars = tuple(vars)
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.advance()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.advance()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.advance()
                p = p * self.unary()
            else:
                return p

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.advance()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.advance()
            kind, val, pos = self.advance()
            if kind == "op" and val == "-":
                raise ExponentError("negative exponent", pos)
            if kind == "op" and val == "(":
                raise ExponentError("exponent must be a plain nonnegative integer literal", pos)
            if kind != "num":
                raise PolySyntaxError(f"expected exponent, found {val or 'end of input'!r}", pos)
            if "/" in val:
                raise ExponentError(f"non-integer exponent {val.replace(' ', '')}", pos)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.advance()
        if kind == "num":
            if "/" in val:
                num, den = (int(s) for s in val.split("/"))
                if den == 0:
                    raise PolySyntaxError("zero denominator", pos)
                return Polynomial.constant(self.vars, Fraction(num, den))
            return Polynomial.constant(self.vars, int(val))
        if kind == "ident":
            if val not in self.vars:
                raise UndeclaredVariableError(f"undeclared variable {val!r}", pos)
            return Polynomial.variable(self.vars, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def parse(text: str, vars: Sequence[str]) -> Polynomial:
    """Parse ``text`` into a polynomial over the declared variables ``vars``."""
    vars = tuple(vars)
    if len(set(vars)) != len(vars):
        raise ValueError(f"duplicate variable names in {vars}")
    for v in vars:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", v):
            raise ValueError(f"invalid variable name {v!r}")
    return _Parser(text, vars).parse()
