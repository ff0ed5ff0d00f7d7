"""Parser for the canonical coefficient expression syntax.

Accepts the forms produced by ``str(IndexPolynomial)`` and, more generally,
any expression over integers and the symbol ``n`` built from ``+ - * / **``
and parentheses, e.g. ``-n*(8*n - 5)/15120``.  Division is only defined by
a nonzero constant and exponents must be nonnegative integer constants, so
every valid expression denotes a polynomial in ``n`` with exact rational
coefficients.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .exact import IndexPolynomial, N


class ExpressionError(ValueError):
    """Raised for syntax errors or non-polynomial constructs."""


_TOKEN = re.compile(r"\d+|\*\*|[n()+\-*/]")


def _reject_nonspace(text: str, start: int, end: int) -> None:
    for i in range(start, end):
        if not text[i].isspace():
            raise ExpressionError(
                f"unexpected character {text[i]!r} at position {i}"
            )


def _tokenize(text: str):
    tokens = []
    pos = 0
    for match in _TOKEN.finditer(text):
        _reject_nonspace(text, pos, match.start())
        tokens.append((match.group(), match.start()))
        pos = match.end()
    _reject_nonspace(text, pos, len(text))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def take(self):
        token, pos = self.tokens[self.index]
        self.index += 1
        return token, pos

    def error(self, message: str, pos=None):
        where = "end of input" if pos is None else f"position {pos}"
        raise ExpressionError(f"{message} at {where}")

    # expr := term (('+' | '-') term)*
    def expr(self) -> IndexPolynomial:
        result = self.term()
        while self.peek() in ("+", "-"):
            op, _ = self.take()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    # term := unary (('*' | '/') unary)*
    def term(self) -> IndexPolynomial:
        result = self.unary()
        while self.peek() in ("*", "/"):
            op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                result = result * rhs
            else:
                if rhs.degree >= 1:
                    self.error("division by a polynomial is not allowed", pos)
                if not rhs:
                    self.error("division by zero", pos)
                result = result / rhs.coefficient(0)
        return result

    # unary := ('+' | '-') unary | power
    def unary(self) -> IndexPolynomial:
        if self.peek() in ("+", "-"):
            op, _ = self.take()
            value = self.unary()
            return value if op == "+" else -value
        return self.power()

    # power := atom ('**' unary)?   -- exponent must be a constant integer >= 0
    def power(self) -> IndexPolynomial:
        base = self.atom()
        if self.peek() == "**":
            _, pos = self.take()
            exponent = self.unary()
            if exponent.degree >= 1:
                self.error("exponent must be an integer constant", pos)
            value = exponent.coefficient(0)
            if value.denominator != 1 or value < 0:
                self.error("exponent must be a nonnegative integer", pos)
            result = IndexPolynomial((1,))
            for _ in range(int(value)):
                result = result * base
            return result
        return base

    # atom := INT | 'n' | '(' expr ')'
    def atom(self) -> IndexPolynomial:
        token = self.peek()
        if token is None:
            self.error("unexpected end of expression")
        token, pos = self.take()
        if token.isdigit():
            return IndexPolynomial((Fraction(int(token)),))
        if token == "n":
            return N
        if token == "(":
            inner = self.expr()
            if self.peek() != ")":
                self.error("missing closing parenthesis", pos)
            self.take()
            return inner
        self.error(f"unexpected token {token!r}", pos)


def parse_expression(text: str) -> IndexPolynomial:
    """Parse an expression in ``n`` into an :class:`IndexPolynomial`."""
    parser = _Parser(text)
    if not parser.tokens:
        raise ExpressionError("empty expression")
    result = parser.expr()
    if parser.peek() is not None:
        token, pos = parser.tokens[parser.index]
        raise ExpressionError(f"unexpected token {token!r} at position {pos}")
    return result
