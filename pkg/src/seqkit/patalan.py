"""Catalan, Patalan and super Patalan numbers.

The Patalan numbers of order ``p`` are the coefficients ``a_n`` with
``x A(x)`` the reversion of ``(1 - (1 - p x)**p) / p**2``; ``p = 2`` gives the
Catalan numbers.  Three convolutional recurrences produce them, and the
super Patalan numbers sit in a quadrant of the recursive matrix
``D((1 - p^2 x)**(-q/p), -x / (1 - p^2 x))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .convolution import (
    PolynomialReversionProblem,
    _PowerRows,
    solve_reversion_recurrence,
    solve_reversion_recurrence_zero,
)
from .riordan import dual_riordan, recursive_matrix_window, riordan_build, window_orders
from .series import PowerSeries, SeriesError, binomial_series


class PatalanDomainError(SeriesError):
    pass


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 2:
        raise PatalanDomainError(f"p must be an integer >= 2, got {p!r}")


def _check_pq(p: int, q: int) -> None:
    _check_p(p)
    if not isinstance(q, int) or not 0 < q < p:
        raise PatalanDomainError(f"need 0 < q < p, got p={p}, q={q}")


@dataclass(frozen=True)
class PatalanSpec:
    p: int
    q: int | None = None
    order: int = 32

    def __post_init__(self):
        if self.q is None:
            _check_p(self.p)
        else:
            _check_pq(self.p, self.q)


@dataclass(frozen=True)
class PatalanForward:
    p: int
    f_poly: tuple  # (1 - (1 - p x)^p) / p^2
    g_poly: tuple  # (1 - (-p x)^p) / p^2


def patalan_forward(p: int) -> PatalanForward:
    _check_p(p)
    p2 = Fraction(p * p)
    # (1 - p x)^p by repeated multiplication
    power = PowerSeries([1, -p] + [0] * (p - 1))
    expanded = PowerSeries.one(p)
    for _ in range(p):
        expanded = expanded * power
    direct = tuple((PowerSeries.one(p) - expanded) * (1 / p2))
    closed = tuple([Fraction(0)] + [
        -comb(p, k) * Fraction(p) ** (k - 2) * (-1) ** k for k in range(1, p + 1)])
    if direct != closed:
        raise AssertionError(f"forward polynomial expansions disagree for p={p}")
    g_poly = [Fraction(0)] * (p + 1)
    g_poly[0] = 1 / p2
    g_poly[p] = -Fraction(-p) ** p / p2
    return PatalanForward(p, direct, tuple(g_poly))


def _eq20_coefficient(p: int, k: int) -> Fraction:
    return (-1) ** k * comb(p, k) * Fraction(p) ** (k - 2)


def patalan_sequence(p: int, N: int) -> list[Fraction]:
    """``a_0 .. a_N`` from ``a_n = sum_{k>1} (-1)^k C(p,k) p^(k-2) convpow(a, n-k+1, k)``."""
    _check_p(p)
    coeff = {k: _eq20_coefficient(p, k) for k in range(2, p + 1)}
    rows = _PowerRows(p)
    rows.push(1)
    for n in range(1, N + 1):
        s = sum((c * rows.convpow(n - k + 1, k) for k, c in coeff.items()), Fraction(0))
        rows.push(s)
    return rows.a


def patalan_c_recurrence(p: int, N: int) -> list[Fraction]:
    """``c_n = sum_{k>=2} (-1)^k C(p,k) p^(k-2) convpow(c, n, k)`` with ``c_0 = 0``, ``c_1 = 1``."""
    return solve_reversion_recurrence_zero(patalan_forward(p).f_poly, N)


def patalan_pth_power_recurrence(p: int, N: int) -> list[Fraction]:
    """``d_n = (-1)^p p^(p-2) truncpow(d, n, p)`` seeded with ``d_0 = -1/p``."""
    forward = patalan_forward(p)
    prob = PolynomialReversionProblem(forward.g_poly, Fraction(-1, p), N)
    return solve_reversion_recurrence(prob)


def super_patalan_generators(p: int, q: int, order: int) -> tuple[PowerSeries, PowerSeries]:
    """``g = (1 - p^2 x)^(-q/p)`` and ``f = -x / (1 - p^2 x)`` to the given order."""
    _check_pq(p, q)
    g = binomial_series(Fraction(-q, p), -p * p, order)
    f = PowerSeries([0] + [-(p * p) ** (n - 1) for n in range(1, order + 1)])
    return g, f


def super_patalan_matrix(p: int, q: int, N: int) -> list[list[Fraction]]:
    """``Q(i, j) = D(i, -j)`` for ``0 <= i, j <= N``.

    Column ``j`` of ``Q`` is column ``-j`` of the recursive matrix, so the
    block is the lower left quadrant with its columns read right to left.
    """
    g, f = super_patalan_generators(p, q, window_orders(N)[1])
    w = recursive_matrix_window(g, f, N)
    return [[w[i, -j] for j in range(N + 1)] for i in range(N + 1)]


def super_patalan_dual_check(p: int, q: int, N: int) -> bool:
    """``R*(g, f) == R(h, f)`` with ``h = (1 - p^2 x)^(-(p-q)/p)``."""
    g, f = super_patalan_generators(p, q, N + 1)
    h, _ = super_patalan_generators(p, p - q, N)
    dual = dual_riordan(g, f, N)
    return dual.entries == riordan_build(h, f.truncate(N), N).entries


def super_catalan(m: int, n: int) -> Fraction:
    """``(2m)! (2n)! / (m! n! (m+n)!)``; the (p, q) = (2, 1) case in closed form."""
    return Fraction(factorial(2 * m) * factorial(2 * n),
                    factorial(m) * factorial(n) * factorial(m + n))


def antidiagonal_rows(matrix: list[list[Fraction]], nrows: int) -> list[Fraction]:
    """Flatten ``T(n, k) = M[k][n - k]`` for ``0 <= k <= n < nrows``."""
    return [matrix[k][n - k] for n in range(nrows) for k in range(n + 1)]
