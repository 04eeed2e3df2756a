"""Exact bivariate curve polynomials and the input grammar.

Grammar: integer, decimal or rational literals, the variables ``x`` and ``y``,
``+ - * / ^`` and parentheses. Juxtaposition multiplies (``3x``). Division is
only allowed by nonzero constants.
"""

from __future__ import annotations

import dataclasses
import functools
import json
import re
from fractions import Fraction

import mpmath
import numpy as np
import sympy

X, Y = sympy.symbols("x y")


class ParseError(ValueError):
    pass


class CurveError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d*)?|\.\d+)|([xy])|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        if m.group(1):
            tokens.append(("num", m.group(1)))
        elif m.group(2):
            tokens.append(("var", m.group(2)))
        else:
            op = m.group(3)
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v = self.take()
        if v != value:
            raise ParseError(f"expected {value!r}, got {v!r}")

    def parse(self) -> sympy.Poly:
        if not self.tokens:
            raise ParseError("empty polynomial")
        p = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def _starts_factor(self):
        kind, v = self.peek()
        return kind in ("num", "var") or v == "("

    def term(self):
        p = self.unary()
        while True:
            kind, v = self.peek()
            if v == "*":
                self.take()
                p = p * self.unary()
            elif v == "/":
                self.take()
                q = self.unary()
                if not q.is_ground or q.is_zero:
                    raise ParseError("division only by nonzero constants")
                p = p * sympy.Poly(1 / q.as_expr(), X, Y, domain="QQ")
            elif self._starts_factor():
                p = p * self.power()
            else:
                return p

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.primary()
        if self.peek() == ("op", "^"):
            self.take()
            kind, v = self.take()
            if kind != "num" or not v.isdigit():
                raise ParseError("exponent must be a non-negative integer")
            return base ** int(v)
        return base

    def primary(self):
        kind, v = self.take()
        if kind == "num":
            return sympy.Poly(sympy.Rational(Fraction(v)), X, Y, domain="QQ")
        if kind == "var":
            return sympy.Poly(X if v == "x" else Y, X, Y, domain="QQ")
        if v == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {v!r}")


def parse_polynomial(text: str) -> sympy.Poly:
    return _Parser(text).parse()


@dataclasses.dataclass(frozen=True, eq=False)
class CurvePoly:
    """A plane curve f(x, y) = 0, normalised monic in ``y``."""

    poly: sympy.Poly
    source: str = ""

    def __post_init__(self):
        p = sympy.Poly(self.poly.as_expr(), X, Y, domain="QQ")
        if p.is_zero:
            raise CurveError("zero polynomial")
        n = p.degree(Y)
        if n < 1:
            raise CurveError("polynomial does not involve y")
        lead = sympy.Poly(p.as_expr(), Y).LC()
        lead = sympy.Poly(lead, X)
        if lead.degree() > 0:
            raise CurveError("leading coefficient in y must be constant (no vertical asymptotes)")
        object.__setattr__(self, "poly", sympy.Poly(p.as_expr() / lead.LC(), X, Y, domain="QQ"))

    @classmethod
    def parse(cls, text: str) -> CurvePoly:
        return cls(parse_polynomial(text), source=text.strip())

    @classmethod
    def from_expr(cls, expr) -> CurvePoly:
        return cls(sympy.Poly(sympy.sympify(expr), X, Y, domain="QQ"), source=str(expr))

    @property
    def n(self) -> int:
        return self.poly.degree(Y)

    @functools.cached_property
    def y_coefficients(self) -> list[sympy.Poly]:
        """Coefficient polynomials in x, highest y power first."""
        coeffs = [sympy.Poly(0, X, domain="QQ")] * (self.n + 1)
        for (i, j), c in self.poly.terms():
            k = self.n - j
            coeffs[k] = coeffs[k] + sympy.Poly(c * X**i, X, domain="QQ")
        return coeffs

    @functools.cached_property
    def _float_coeffs(self) -> list[np.ndarray]:
        return [np.array([float(c) for c in p.all_coeffs()]) for p in self.y_coefficients]

    def fiber_coeffs(self, x: complex) -> np.ndarray:
        """Float coefficients of f(x, .) highest power first."""
        if isinstance(x, complex) and x.imag == 0:
            x = x.real
        return np.array([np.polyval(c, x) for c in self._float_coeffs])

    def fiber_coeffs_mp(self, x) -> list:
        out = []
        for p in self.y_coefficients:
            acc = mpmath.mpf(0)
            for c in p.all_coeffs():
                acc = acc * x + mpmath.mpf(sympy.Rational(c).p) / sympy.Rational(c).q
            out.append(acc)
        return out

    def evaluate(self, x: complex, y: complex) -> complex:
        return complex(np.polyval(self.fiber_coeffs(x), y))

    @functools.cached_property
    def discriminant(self) -> sympy.Poly:
        if self.n == 1:
            return sympy.Poly(1, X, domain="QQ")
        return sympy.Poly(sympy.discriminant(self.poly.as_expr(), Y), X, domain="QQ")

    def to_json(self) -> dict:
        """Exact echo of the parsed polynomial."""
        terms = sorted(((int(i), int(j), str(sympy.Rational(c)))
                        for (i, j), c in self.poly.terms()), reverse=True)
        return {"variables": ["x", "y"], "source": self.source,
                "terms": [[i, j, c] for i, j, c in terms]}

    @classmethod
    def from_json(cls, data: dict | str) -> CurvePoly:
        if isinstance(data, str):
            data = json.loads(data)
        expr = sum(sympy.Rational(c) * X**i * Y**j for i, j, c in data["terms"])
        return cls(sympy.Poly(expr, X, Y, domain="QQ"), source=data.get("source", ""))

    def __str__(self) -> str:
        return str(self.poly.as_expr())
