"""Riordan arrays, recursive matrices and dual Riordan arrays."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .series import (
    LaurentSeries,
    OrderMismatchError,
    PowerSeries,
    Rational,
    SeriesError,
    format_rational,
    laurent_int_pow,
    ps_compose,
    ps_derivative,
    ps_inverse,
    ps_mul,
    ps_revert,
    to_rational,
)


class RiordanDomainError(SeriesError):
    pass


def _check_pair(g: PowerSeries, f: PowerSeries) -> None:
    if g[0] == 0:
        raise RiordanDomainError("g(0) must be nonzero")
    if f.order < 1 or f[0] != 0 or f[1] == 0:
        raise RiordanDomainError("f needs f(0) = 0 and f'(0) != 0")


@dataclass(frozen=True)
class MatrixWindow:
    """A finite block of a (possibly doubly infinite) matrix.

    ``entries[r][c]`` holds the entry at ``(row_offset + r, col_offset + c)``.
    """

    row_offset: int
    col_offset: int
    entries: tuple

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        n, k = idx
        r, c = n - self.row_offset, k - self.col_offset
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError(f"({n}, {k}) lies outside the window")
        return self.entries[r][c]

    def row_range(self) -> range:
        return range(self.row_offset, self.row_offset + self.rows)

    def col_range(self) -> range:
        return range(self.col_offset, self.col_offset + self.cols)

    def block(self, rows: range, cols: range) -> list[list[Fraction]]:
        return [[self[n, k] for k in cols] for n in rows]

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols,
                "row_offset": self.row_offset, "col_offset": self.col_offset,
                "entries": [[format_rational(v) for v in row] for row in self.entries]}

    @classmethod
    def from_json(cls, obj: dict) -> MatrixWindow:
        entries = tuple(tuple(to_rational(v) for v in row) for row in obj["entries"])
        window = cls(obj["row_offset"], obj["col_offset"], entries)
        if window.rows != obj["rows"] or (entries and window.cols != obj["cols"]):
            raise ValueError("declared shape disagrees with entries")
        return window


@dataclass(frozen=True)
class RiordanArray:
    g: PowerSeries
    f: PowerSeries
    entries: tuple  # entries[n][k] = [x^n] g f^k

    @property
    def order(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        n, k = idx
        return self.entries[n][k]

    def column(self, k: int) -> list[Fraction]:
        return [row[k] for row in self.entries]

    def as_window(self) -> MatrixWindow:
        return MatrixWindow(0, 0, self.entries)


def riordan_build(g: PowerSeries, f: PowerSeries, N: int) -> RiordanArray:
    """``R(g, f)`` realised for rows and columns ``0..N``."""
    if g.order < N or f.order < N:
        raise OrderMismatchError(f"g and f must be known to order {N}")
    g, f = g.truncate(N), f.truncate(N)
    _check_pair(g, f)
    columns = []
    col = g
    for _ in range(N + 1):
        columns.append(col.coeffs)
        col = ps_mul(col, f)
    entries = tuple(tuple(columns[k][n] for k in range(N + 1)) for n in range(N + 1))
    return RiordanArray(g, f, entries)


def riordan_multiply(r1: RiordanArray, r2: RiordanArray) -> RiordanArray:
    """Group law ``(g, f) * (h, l) = (g * h(f), l(f))``."""
    if r1.order != r2.order:
        raise OrderMismatchError("Riordan arrays of different orders")
    g = ps_mul(r1.g, ps_compose(r2.g, r1.f))
    f = ps_compose(r2.f, r1.f)
    return riordan_build(g, f, r1.order)


def identity_array(N: int) -> RiordanArray:
    return riordan_build(PowerSeries.one(N), PowerSeries.x(N), N)


@dataclass(frozen=True)
class ASequence:
    terms: tuple

    def __init__(self, terms: Sequence[Rational]):
        object.__setattr__(self, "terms", tuple(to_rational(t) for t in terms))

    def __getitem__(self, j: int) -> Fraction:
        return self.terms[j] if j < len(self.terms) else Fraction(0)

    def __len__(self) -> int:
        return len(self.terms)


def a_sequence(r: RiordanArray, M: int) -> ASequence:
    """``a_0 .. a_M`` from ``A(x) = x / fbar(x)``."""
    if r.f.order < M + 1:
        raise OrderMismatchError(f"array must be realised to order {M + 1}")
    fbar = ps_revert(r.f.truncate(M + 1))
    return ASequence(ps_inverse(fbar.shift_down(1)).coeffs)


def a_sequence_recurrence_check(r: RiordanArray, a: ASequence) -> bool:
    """Does ``d[n+1][k+1] == sum_j a_j d[n][k+j]`` hold on the realised table?

    Triangularity cuts the sum at ``j = n - k``.
    """
    d = r.entries
    N = r.order
    for n in range(N):
        for k in range(N):
            rhs = sum((a[j] * d[n][k + j] for j in range(0, n - k + 1)), Fraction(0))
            if d[n + 1][k + 1] != rhs:
                return False
    return True


def inv_transform(f: Sequence[Rational]) -> list[Fraction]:
    if not f or to_rational(f[0]) == 0:
        raise RiordanDomainError("INV needs f_0 != 0")
    return list(ps_inverse(PowerSeries(f)).coeffs)


def rev_transform(f: Sequence[Rational]) -> list[Fraction]:
    """Revert ``F(x) = sum f_n x^(n+1)`` and read off ``H(x) = sum h_n x^(n+1)``."""
    if not f or to_rational(f[0]) == 0:
        raise RiordanDomainError("REV needs f_0 != 0")
    F = PowerSeries([0] + list(f))
    return list(ps_revert(F).coeffs[1:])


def a_seq_via_inv_rev(f: Sequence[Rational], M: int) -> ASequence:
    """A-sequence of ``R(1, x f(x))`` as ``INV(REV(f))``."""
    if len(f) < M + 1:
        raise OrderMismatchError(f"need {M + 1} terms of f")
    return ASequence(inv_transform(rev_transform(list(f)[: M + 1])))


@dataclass(frozen=True)
class RecursiveMatrixWindow(MatrixWindow):
    g: PowerSeries = None
    f: PowerSeries = None
    halfwidth: int = 0

    def quadrant(self, rows: str, cols: str) -> list[list[Fraction]]:
        """``rows``/``cols`` are ``'+'`` (indices ``0..N``) or ``'-'``
        (indices ``-1..-N``, nearest the origin first)."""
        N = self.halfwidth
        pick = {"+": range(0, N + 1), "-": range(-1, -N - 1, -1)}
        return self.block(pick[rows], pick[cols])


def window_orders(N: int) -> tuple[int, int]:
    """Orders of g and f needed to fill a window of halfwidth ``N``."""
    return 2 * N, 2 * N + 1


def column_series(g: PowerSeries, f: PowerSeries, k: int) -> LaurentSeries:
    """``g * f**k`` as a Laurent series."""
    return laurent_int_pow(f, k) * LaurentSeries.from_power_series(g)


def recursive_matrix_window(g: PowerSeries, f: PowerSeries, N: int) -> RecursiveMatrixWindow:
    """``D(n, k) = [x^n] g f^k`` for ``-N <= n, k <= N``.

    Column ``-N`` needs ``g`` to order ``2N`` and ``f`` to order ``2N + 1``.
    """
    g_order, f_order = window_orders(N)
    if g.order < g_order or f.order < f_order:
        raise OrderMismatchError(
            f"halfwidth {N} needs g to order {g_order} and f to order {f_order}")
    _check_pair(g, f)
    g, f = g.truncate(g_order), f.truncate(f_order)
    cols = []
    for k in range(-N, N + 1):
        series = column_series(g, f, k)
        cols.append([series[n] for n in range(-N, N + 1)])
    entries = tuple(tuple(cols[c][r] for c in range(2 * N + 1)) for r in range(2 * N + 1))
    return RecursiveMatrixWindow(-N, -N, entries, g=g, f=f, halfwidth=N)


def anti_transpose(w):
    """Reflect across the anti-diagonal.

    A :class:`MatrixWindow` uses the index law ``result[i, j] = w[-j, -i]``;
    a plain list-of-rows matrix is reflected across its own anti-diagonal.
    """
    if isinstance(w, MatrixWindow):
        row_offset = -(w.col_offset + w.cols - 1)
        col_offset = -(w.row_offset + w.rows - 1)
        entries = tuple(
            tuple(w[-j, -i] for j in range(col_offset, col_offset + w.rows))
            for i in range(row_offset, row_offset + w.cols))
        return MatrixWindow(row_offset, col_offset, entries)
    m, n = len(w), len(w[0])
    return [[w[m - 1 - j][n - 1 - i] for j in range(m)] for i in range(n)]


def dual_generators(g: PowerSeries, f: PowerSeries) -> tuple[PowerSeries, PowerSeries]:
    """``(fhat * g(fbar), fbar)`` with ``fhat = x fbar' / fbar``.

    Inputs of order N give a pair of order N - 1.
    """
    _check_pair(g, f)
    N = min(g.order, f.order)
    g, f = g.truncate(N), f.truncate(N)
    fbar = ps_revert(f)
    # x fbar' / fbar == fbar' / (fbar / x); both factors are units
    fhat = ps_mul(ps_derivative(fbar), ps_inverse(fbar.shift_down(1)))
    gnew = ps_mul(fhat, ps_compose(g, fbar).truncate(N - 1))
    return gnew, fbar.truncate(N - 1)


def dual_riordan(g: PowerSeries, f: PowerSeries, N: int | None = None) -> RiordanArray:
    gd, fd = dual_generators(g, f)
    if N is None:
        N = gd.order
    return riordan_build(gd, fd, N)


def dual_via_window(g: PowerSeries, f: PowerSeries, N: int) -> list[list[Fraction]]:
    """``R*(i, j) = D(-j, -i)`` for ``0 <= i, j <= N``."""
    w = recursive_matrix_window(g, f, N)
    return [[w[-j, -i] for j in range(N + 1)] for i in range(N + 1)]
