"""Convolution powers, truncated convolution powers, and the
reversion-to-recurrence engine.

Notation: ``convpow(a, n, k) = [x^n] A(x)**k`` and ``truncpow(a, n, k)`` is
the same sum with the ``k * a0**(k-1) * a_n`` contribution taken out, which
is what lets ``a_n`` be solved for from earlier terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import Rational, SeriesError, to_rational


class RecurrenceError(SeriesError):
    pass


class RootError(RecurrenceError):
    pass


class SingularDerivativeError(RecurrenceError):
    pass


class InsufficientTermsError(RecurrenceError):
    pass


def _as_sequence(a: Sequence[Rational]) -> tuple:
    return tuple(to_rational(x) for x in a)


@dataclass(frozen=True)
class ConvPowerTable:
    base: tuple
    rows: tuple  # rows[k - 1][n]

    @property
    def max_n(self) -> int:
        return len(self.rows[0]) - 1

    @property
    def max_k(self) -> int:
        return len(self.rows)

    def __call__(self, n: int, k: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        return self.rows[k - 1][n]


@dataclass(frozen=True)
class TruncPowerTable(ConvPowerTable):
    pass


def conv_power_table(a: Sequence[Rational], N: int, K: int) -> ConvPowerTable:
    """``convpow(n, k)`` for ``0 <= n <= N``, ``1 <= k <= K``.

    Built column by column from ``convpow(n, k) = sum_j a[n-j] convpow(j, k-1)``.
    """
    a = _as_sequence(a)
    if len(a) < N + 1:
        raise InsufficientTermsError(f"need {N + 1} terms, got {len(a)}")
    if K < 1:
        raise ValueError("K must be at least 1")
    rows = [a[: N + 1]]
    for _ in range(2, K + 1):
        prev = rows[-1]
        rows.append(tuple(
            sum((a[n - j] * prev[j] for j in range(n + 1)), Fraction(0))
            for n in range(N + 1)))
    return ConvPowerTable(a[: N + 1], tuple(rows))


def conv_power_oracle(a: Sequence[Rational], n: int, k: int) -> Fraction:
    """Brute-force ``[x^n] A(x)**k``: sum over every composition of ``n``
    into ``k`` nonnegative parts.  Exponential; reference use only."""
    a = _as_sequence(a)

    def walk(remaining: int, parts: int) -> Fraction:
        if parts == 1:
            return a[remaining] if remaining < len(a) else Fraction(0)
        total = Fraction(0)
        for i in range(min(remaining, len(a) - 1) + 1):
            if a[i]:
                total += a[i] * walk(remaining - i, parts - 1)
        return total

    return walk(n, k)


def trunc_power_table(a: Sequence[Rational], N: int, K: int) -> TruncPowerTable:
    """``truncpow(n, k)`` for ``0 <= n <= N``, ``1 <= k <= K``.

    Rows ``n >= 1`` follow ``truncpow(n, k) = sum_{j=1}^{n-1} a[n-j]
    convpow(j, k-1) + a0 truncpow(n, k-1)`` with ``truncpow(n, 1) = 0``.
    Row ``n = 0`` is ``(1 - k) a0**k`` so that ``convpow = truncpow +
    k a0**(k-1) a_n`` holds there too.
    """
    conv = conv_power_table(a, N, K)
    a = conv.base
    rows = [tuple(Fraction(0) for _ in range(N + 1))]
    for k in range(2, K + 1):
        prev = rows[-1]
        row = [(1 - k) * a[0] ** k]
        for n in range(1, N + 1):
            s = sum((a[n - j] * conv(j, k - 1) for j in range(1, n)), Fraction(0))
            row.append(s + a[0] * prev[n])
        rows.append(tuple(row))
    return TruncPowerTable(a, tuple(rows))


class _PowerRows:
    """Convolution and truncated powers of a sequence that is still growing.

    ``pending(n)`` gives ``truncpow(n, k)`` for all k using only ``a_0 ..
    a_{n-1}``; ``push(a_n)`` then completes ``convpow(n, k)`` from it.
    """

    def __init__(self, K: int):
        self.K = K
        self.a: list[Fraction] = []
        self.conv: list[list[Fraction]] = []  # conv[n][k], k = 0..K

    def pending(self, n: int) -> list[Fraction]:
        a, conv = self.a, self.conv
        trunc = [Fraction(0)] * (self.K + 1)
        for k in range(2, self.K + 1):
            s = Fraction(0)
            for j in range(1, n):
                if a[n - j]:
                    s += a[n - j] * conv[j][k - 1]
            trunc[k] = s + a[0] * trunc[k - 1]
        return trunc

    def push(self, value: Rational, trunc: list[Fraction] | None = None) -> None:
        value = to_rational(value)
        n = len(self.a)
        self.a.append(value)
        if n == 0:
            self.conv.append([Fraction(1)] + [value ** k for k in range(1, self.K + 1)])
            return
        if trunc is None:
            trunc = self.pending(n)
        a0 = self.a[0]
        self.conv.append([Fraction(0)] + [
            trunc[k] + k * a0 ** (k - 1) * value for k in range(1, self.K + 1)])

    def convpow(self, n: int, k: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        return self.conv[n][k]


def _poly_eval(b: Sequence[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(b):
        acc = acc * x + c
    return acc


def _poly_derivative(b: Sequence[Fraction]) -> tuple:
    return tuple(k * b[k] for k in range(1, len(b)))


@dataclass(frozen=True)
class PolynomialReversionProblem:
    """Find ``A`` with ``B(A(x)) = x`` and ``A(0) = root``."""

    B: tuple
    root: Fraction
    order: int

    def __init__(self, B: Sequence[Rational], root: Rational, order: int):
        object.__setattr__(self, "B", _as_sequence(B))
        object.__setattr__(self, "root", to_rational(root))
        object.__setattr__(self, "order", order)

    def check(self) -> Fraction:
        """Validate the root; return ``B'(root)``."""
        if _poly_eval(self.B, self.root) != 0:
            raise RootError(f"B({self.root}) != 0")
        slope = _poly_eval(_poly_derivative(self.B), self.root)
        if slope == 0:
            raise SingularDerivativeError(f"B'({self.root}) = 0")
        return slope


def solve_reversion_recurrence(prob: PolynomialReversionProblem) -> list[Fraction]:
    """Terms ``a_0 .. a_N`` of the series whose reversion is the polynomial B.

    ``a_0`` is the supplied root, ``a_1 = 1 / B'(a_0)``, and for ``n > 1``
    ``a_n = -a_1 sum_k b_k truncpow(a, n, k)``, the truncated powers for row
    ``n`` being formed before ``a_n``.
    """
    a1 = 1 / prob.check()
    b = prob.B
    deg = len(b) - 1
    rows = _PowerRows(max(deg, 1))
    rows.push(prob.root)
    if prob.order >= 1:
        rows.push(a1)
    for n in range(2, prob.order + 1):
        trunc = rows.pending(n)
        s = sum((b[k] * trunc[k] for k in range(2, deg + 1)), Fraction(0))
        rows.push(-a1 * s, trunc)
    return rows.a[: prob.order + 1]


def solve_reversion_recurrence_zero(b: Sequence[Rational], N: int) -> list[Fraction]:
    """Reversion of ``B`` with ``b_0 = 0`` via ``a_n = -a_1 sum_{k>1} b_k convpow(a, n, k)``.

    ``b`` may be a polynomial or a truncated series; terms past its end are
    taken as zero.
    """
    b = _as_sequence(b)
    if not b or b[0] != 0:
        raise RootError("b_0 must be 0")
    if len(b) < 2 or b[1] == 0:
        raise SingularDerivativeError("b_1 must be nonzero")
    a1 = 1 / b[1]
    K = min(len(b) - 1, max(N, 1))
    rows = _PowerRows(K)
    rows.push(0)
    if N >= 1:
        rows.push(a1)
    for n in range(2, N + 1):
        # with a_0 = 0, convpow(n, k > 1) only involves a_1 .. a_{n-1}
        trunc = rows.pending(n)
        s = sum((b[k] * trunc[k] for k in range(2, min(n, K) + 1)), Fraction(0))
        rows.push(-a1 * s, trunc)
    return rows.a[: N + 1]


def shifted_recurrence_terms(a: Sequence[Rational], b: Sequence[Rational], n: int) -> Fraction:
    """Right-hand side of ``a_n = -a_0 sum_{k>1} b_k convpow(a, n-k+1, k)``.

    ``b`` holds the reversion of ``x A(x)``; convolution powers with a
    negative index are zero.  Only ``a_0 .. a_{n-1}`` are read.
    """
    a = _as_sequence(a)
    b = _as_sequence(b)
    if a[0] == 0:
        raise ValueError("a_0 must be nonzero")
    K = min(len(b) - 1, n + 1)
    if K < 2:
        return Fraction(0)
    table = conv_power_table(a[:n], n - 1, K) if n >= 1 else None
    s = Fraction(0)
    for k in range(2, K + 1):
        m = n - k + 1
        if m >= 0 and b[k]:
            s += b[k] * table(m, k)
    return -a[0] * s
