"""Parse series literals given on the command line.

Two forms are accepted:

* a comma-separated coefficient list, ``"0,1,-1"`` or ``"1/2, 3"``;
* a small closed-form grammar over ``x``: sums, products (``*``, ``/``,
  juxtaposition as in ``9x``), integer powers, rational powers of series
  with constant term 1 (``(1-9x)^(-1/3)``) and ``sqrt(...)``.

Division is only by series with a nonzero constant term.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .series import PowerSeries, binomial_series, ps_compose, ps_inverse


class LiteralError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(sqrt)|([-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    tokens, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise LiteralError(f"unexpected character {text[pos]!r} in {text!r}")
        tokens.append(next(g for g in m.groups() if g is not None))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, order: int):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.order = order

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise LiteralError(f"expected {expected or 'more input'} in {self.text!r}")
        self.pos += 1
        return tok

    def parse(self) -> PowerSeries:
        value = self.expr()
        if self.peek() is not None:
            raise LiteralError(f"trailing input {self.peek()!r} in {self.text!r}")
        return value

    def expr(self) -> PowerSeries:
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value = value + self.term()
            else:
                value = value - self.term()
        return value

    def term(self) -> PowerSeries:
        value = self.unary()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                value = value * self.unary()
            elif tok == "/":
                self.take()
                denom = self.unary()
                if denom[0] == 0:
                    raise LiteralError(f"division by a series with zero constant term in {self.text!r}")
                value = value * ps_inverse(denom)
            elif tok in ("x", "(", "sqrt") or (tok is not None and tok.isdigit()):
                value = value * self.power()
            else:
                return value

    def unary(self) -> PowerSeries:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> PowerSeries:
        base = self.atom()
        if self.peek() != "^":
            return base
        self.take("^")
        exponent = self.exponent()
        if exponent.denominator == 1 and exponent >= 0:
            return base ** int(exponent)
        return _rational_power(base, exponent, self.text)

    def exponent(self) -> Fraction:
        if self.peek() == "(":
            self.take("(")
            sign = 1
            if self.peek() in ("-", "+"):
                sign = -1 if self.take() == "-" else 1
            num = int(self.take())
            den = 1
            if self.peek() == "/":
                self.take("/")
                den = int(self.take())
            self.take(")")
            return sign * Fraction(num, den)
        tok = self.take()
        if not tok.isdigit():
            raise LiteralError(f"bad exponent {tok!r} in {self.text!r}")
        return Fraction(int(tok))

    def atom(self) -> PowerSeries:
        tok = self.take()
        if tok.isdigit():
            return PowerSeries.monomial(0, self.order, int(tok))
        if tok == "x":
            return PowerSeries.x(self.order)
        if tok == "sqrt":
            self.take("(")
            inner = self.expr()
            self.take(")")
            return _rational_power(inner, Fraction(1, 2), self.text)
        if tok == "(":
            inner = self.expr()
            self.take(")")
            return inner
        raise LiteralError(f"unexpected {tok!r} in {self.text!r}")


def _rational_power(base: PowerSeries, alpha: Fraction, text: str) -> PowerSeries:
    if alpha.denominator == 1:
        if base[0] == 0:
            raise LiteralError(f"negative power of a non-unit in {text!r}")
        return ps_inverse(base) ** int(-alpha)
    if base[0] != 1:
        raise LiteralError(f"rational powers need constant term 1 in {text!r}")
    # (1 + u)^alpha = sum binom(alpha, k) u^k
    outer = binomial_series(alpha, 1, base.order)
    return ps_compose(outer, base - 1)


def parse_series(text: str, order: int) -> PowerSeries:
    """Parse either literal form into a series of the given order."""
    if "," in text or re.fullmatch(r"\s*-?\d+(/\d+)?\s*", text):
        return PowerSeries.from_poly(parse_coefficients(text), order)
    return _Parser(text, order).parse()


def parse_coefficients(text: str) -> list[Fraction]:
    """Comma-separated rationals, kept at their written length."""
    try:
        coeffs = [Fraction(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise LiteralError(f"bad coefficient list {text!r}") from exc
    if not coeffs:
        raise LiteralError("empty coefficient list")
    return coeffs
