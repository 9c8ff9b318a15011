"""Truncated power series and Laurent series over the rationals.

Every coefficient is a :class:`fractions.Fraction`; nothing here touches
floating point.  A :class:`PowerSeries` of order ``N`` carries the
coefficients of ``x**0 .. x**N`` and every operation on series of order ``N``
returns a result that is exact through ``x**N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Union[int, Fraction]


class SeriesError(ValueError):
    """Base class for domain errors raised by series operations."""


class OrderMismatchError(SeriesError):
    pass


class NotInvertibleError(SeriesError):
    pass


class CompositionDomainError(SeriesError):
    pass


class NoReversionError(SeriesError):
    pass


class ValuationError(SeriesError):
    pass


def to_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact coefficient {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple

    def __init__(self, coeffs: Iterable[Rational]):
        cs = tuple(to_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, order: int) -> PowerSeries:
        return cls([0] * (order + 1))

    @classmethod
    def one(cls, order: int) -> PowerSeries:
        return cls.monomial(0, order)

    @classmethod
    def x(cls, order: int) -> PowerSeries:
        return cls.monomial(1, order)

    @classmethod
    def monomial(cls, degree: int, order: int, coeff: Rational = 1) -> PowerSeries:
        cs = [Fraction(0)] * (order + 1)
        if degree <= order:
            cs[degree] = to_rational(coeff)
        return cls(cs)

    @classmethod
    def from_poly(cls, coeffs: Sequence[Rational], order: int) -> PowerSeries:
        """Pad (or truncate) a coefficient list to the given order."""
        cs = list(coeffs[: order + 1])
        cs += [0] * (order + 1 - len(cs))
        return cls(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"[x^{n}] is outside the window 0..{self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise OrderMismatchError(
                f"cannot extend a series of order {self.order} to order {order}")
        return PowerSeries(self.coeffs[: order + 1])

    def valuation(self) -> int | None:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    def shift_down(self, k: int = 1) -> PowerSeries:
        """Divide by ``x**k``; the low coefficients must vanish."""
        if any(self.coeffs[:k]):
            raise ValuationError(f"series is not divisible by x^{k}")
        return PowerSeries(self.coeffs[k:])

    def shift_up(self, k: int = 1) -> PowerSeries:
        """Multiply by ``x**k`` keeping the order fixed."""
        return PowerSeries([0] * k + list(self.coeffs[: len(self.coeffs) - k]))

    def __add__(self, other):
        if not isinstance(other, PowerSeries):
            other = PowerSeries.monomial(0, self.order, to_rational(other))
        _check_orders(self, other)
        return PowerSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        c = to_rational(other)
        return PowerSeries(c * a for a in self.coeffs)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> PowerSeries:
        if k < 0:
            return ps_inverse(self) ** (-k)
        result = PowerSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = ps_mul(result, base)
            k >>= 1
            if k:
                base = ps_mul(base, base)
        return result

    def __repr__(self) -> str:
        return f"PowerSeries([{', '.join(str(c) for c in self.coeffs)}])"

    def to_json(self) -> dict:
        return {"order": self.order,
                "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> PowerSeries:
        series = cls(obj["coeffs"])
        if series.order != obj["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return series


def _check_orders(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"orders differ: {a.order} vs {b.order}")


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product, schoolbook."""
    _check_orders(a, b)
    ac, bc = a.coeffs, b.coeffs
    n_terms = len(ac)
    out = []
    for n in range(n_terms):
        s = Fraction(0)
        for j in range(n + 1):
            if ac[j] and bc[n - j]:
                s += ac[j] * bc[n - j]
        out.append(s)
    return PowerSeries(out)


def ps_inverse(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse, solved row by row."""
    if a.coeffs[0] == 0:
        raise NotInvertibleError("constant term is zero")
    inv0 = 1 / a.coeffs[0]
    r = [inv0]
    for n in range(1, len(a.coeffs)):
        s = sum((a.coeffs[j] * r[n - j] for j in range(1, n + 1)), Fraction(0))
        r.append(-s * inv0)
    return PowerSeries(r)


def ps_compose(g: PowerSeries, f: PowerSeries) -> PowerSeries:
    """``g(f(x))`` by Horner's rule; requires ``f(0) == 0``."""
    _check_orders(g, f)
    if f.coeffs[0] != 0:
        raise CompositionDomainError("inner series must have zero constant term")
    result = PowerSeries.monomial(0, f.order, g.coeffs[-1])
    for c in reversed(g.coeffs[:-1]):
        result = ps_mul(result, f) + c
    return result


def ps_derivative(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return PowerSeries([0])
    return PowerSeries((n + 1) * a.coeffs[n + 1] for n in range(a.order))


def ps_revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse of a valuation-one series.

    The coefficients ``b_n`` of the reversion are found one at a time from
    ``[x^n] sum_k b_k f^k = [n == 1]``; ``[x^n] f^n = f_1^n`` is the pivot.
    """
    if f.coeffs[0] != 0 or f.order < 1 or f.coeffs[1] == 0:
        raise NoReversionError("reversion needs f(0) = 0 and f'(0) != 0")
    order = f.order
    powers = [PowerSeries.one(order)]
    for _ in range(order):
        powers.append(ps_mul(powers[-1], f))
    b = [Fraction(0)]
    for n in range(1, order + 1):
        s = sum((b[k] * powers[k].coeffs[n] for k in range(1, n)), Fraction(0))
        target = 1 if n == 1 else 0
        b.append((target - s) / powers[n].coeffs[n])
    return PowerSeries(b)


def binomial_series(alpha: Rational, c: Rational, order: int) -> PowerSeries:
    """Coefficients of ``(1 + c*x)**alpha`` for rational ``alpha``."""
    alpha, c = to_rational(alpha), to_rational(c)
    term = Fraction(1)
    out = [term]
    for n in range(1, order + 1):
        term = term * (alpha - n + 1) / n * c
        out.append(term)
    return PowerSeries(out)


@dataclass(frozen=True)
class LaurentSeries:
    """Series with a finite principal part.

    ``coeffs[i]`` is the coefficient of ``x**(valuation + i)``; the window
    ends at exponent ``order``.
    """

    valuation: int
    coeffs: tuple

    def __init__(self, valuation: int, coeffs: Iterable[Rational]):
        cs = list(to_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a Laurent series needs at least one coefficient")
        # normalise so the leading stored coefficient is nonzero
        lead = next((i for i, c in enumerate(cs) if c), None)
        if lead is None:
            lead = len(cs) - 1
        object.__setattr__(self, "valuation", valuation + lead)
        object.__setattr__(self, "coeffs", tuple(cs[lead:]))

    @classmethod
    def from_power_series(cls, a: PowerSeries) -> LaurentSeries:
        return cls(0, a.coeffs)

    @property
    def order(self) -> int:
        return self.valuation + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"[x^{n}] is beyond the known window (order {self.order})")
        if n < self.valuation:
            return Fraction(0)
        return self.coeffs[n - self.valuation]

    def __mul__(self, other: LaurentSeries) -> LaurentSeries:
        if isinstance(other, PowerSeries):
            other = LaurentSeries.from_power_series(other)
        if not isinstance(other, LaurentSeries):
            c = to_rational(other)
            return LaurentSeries(self.valuation, (c * a for a in self.coeffs))
        if self.is_zero() or other.is_zero():
            order = min(self.order, other.order)
            return LaurentSeries(order, [0])
        v = self.valuation + other.valuation
        # known exactly until the first truncated term of either factor enters
        order = min(self.order + other.valuation, other.order + self.valuation)
        a, b = self.coeffs, other.coeffs
        out = []
        for n in range(order - v + 1):
            s = Fraction(0)
            for j in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1):
                s += a[j] * b[n - j]
            out.append(s)
        return LaurentSeries(v, out)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {"valuation": self.valuation, "order": self.order,
                "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> LaurentSeries:
        series = cls(obj["valuation"], obj["coeffs"])
        if series.order != obj["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return series


def laurent_int_pow(f: PowerSeries, k: int) -> LaurentSeries:
    """``f**k`` for any integer ``k``, with ``f`` of valuation exactly one.

    Writing ``f = x*u`` with ``u(0) != 0`` gives ``f**k = x**k * u**k``; for
    negative ``k`` the unit ``u`` is inverted first.  Given ``f`` through
    ``x**N`` the result is exact through ``x**(k + N - 1)``.
    """
    if f.order < 1 or f.coeffs[0] != 0 or f.coeffs[1] == 0:
        raise ValuationError("laurent_int_pow needs f(0) = 0 and f'(0) != 0")
    if k == 0:
        return LaurentSeries(0, [1] + [0] * (f.order - 1))
    unit = f.shift_down(1)
    if k < 0:
        unit = ps_inverse(unit)
    return LaurentSeries(k, (unit ** abs(k)).coeffs)
