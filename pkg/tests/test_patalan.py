from fractions import Fraction

import pytest

from seqkit.patalan import (
    PatalanDomainError,
    PatalanSpec,
    antidiagonal_rows,
    patalan_c_recurrence,
    patalan_forward,
    patalan_pth_power_recurrence,
    patalan_sequence,
    super_catalan,
    super_patalan_dual_check,
    super_patalan_generators,
    super_patalan_matrix,
)
from seqkit.series import PowerSeries, binomial_series, ps_revert

from oracles import binom_rational, catalan, lagrange_reversion
from oracles import super_catalan as super_catalan_oracle


def closed_form(p, n):
    """p-Patalan numbers as coefficients of (1 - (1 - p^2 x)^(1/p)) / (p x)."""
    return -binom_rational(Fraction(1, p), n + 1) * (-p * p) ** (n + 1) / p


class TestForward:
    def test_p2(self):
        fwd = patalan_forward(2)
        assert fwd.f_poly == (0, 1, -1)
        assert fwd.g_poly == (Fraction(1, 4), 0, -1)

    def test_p4(self):
        fwd = patalan_forward(4)
        assert fwd.g_poly == (Fraction(1, 16), 0, 0, 0, -16)
        assert fwd.f_poly == (0, 1, -6, 16, -16)

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_g_is_shifted_f(self, p):
        # (1 - (-p u)^p) / p^2 at u = x - 1/p
        fwd = patalan_forward(p)
        u = Fraction(7, 3)
        g_val = sum(c * u ** k for k, c in enumerate(fwd.g_poly))
        f_val = sum(c * (u + Fraction(1, p)) ** k for k, c in enumerate(fwd.f_poly))
        assert g_val == f_val


class TestSequence:
    def test_catalan(self):
        assert patalan_sequence(2, 10) == [catalan(n) for n in range(11)]

    def test_p3(self):
        assert patalan_sequence(3, 5) == [1, 3, 15, 90, 594, 4158]

    def test_p4(self):
        assert patalan_sequence(4, 4) == [1, 6, 56, 616, 7392]

    @pytest.mark.parametrize("p", [2, 3, 4, 5, 6])
    def test_closed_form(self, p):
        assert patalan_sequence(p, 12) == [closed_form(p, n) for n in range(13)]

    @pytest.mark.parametrize("p", [2, 3, 4, 5])
    def test_routes_agree(self, p):
        N = 16
        a = patalan_sequence(p, N)
        c = patalan_c_recurrence(p, N + 1)
        d = patalan_pth_power_recurrence(p, N + 1)
        fwd = patalan_forward(p)
        assert c[0] == 0 and c[1:] == a
        assert d[0] == Fraction(-1, p) and d[1:] == a
        rev = ps_revert(PowerSeries.from_poly(fwd.f_poly, N + 1))
        assert list(rev) == c
        assert lagrange_reversion(list(fwd.f_poly), N + 1) == c

    @pytest.mark.parametrize("p", [2, 3, 7])
    def test_integral(self, p):
        assert all(t.denominator == 1 for t in patalan_sequence(p, 20))

    @pytest.mark.parametrize("p", [1, 0, -2])
    def test_domain(self, p):
        with pytest.raises(PatalanDomainError):
            patalan_sequence(p, 4)
        with pytest.raises(PatalanDomainError):
            PatalanSpec(p)


class TestSuperPatalan:
    def test_generators(self):
        g, f = super_patalan_generators(3, 1, 4)
        assert g == binomial_series(Fraction(-1, 3), -9, 4)
        assert list(f) == [0, -1, -9, -81, -729]

    def test_super_catalan_oracle(self):
        for m in range(7):
            for n in range(7):
                assert super_catalan(m, n) == super_catalan_oracle(m, n)

    def test_matrix_is_super_catalan(self):
        q = super_patalan_matrix(2, 1, 6)
        assert all(q[i][j] == super_catalan_oracle(i, j) for i in range(7) for j in range(7))
        assert q[0][:3] == [1, 2, 6]

    def test_antidiagonals(self):
        q = super_patalan_matrix(2, 1, 3)
        assert antidiagonal_rows(q, 3) == [1, 2, 2, 6, 2, 6]

    def test_symmetric_for_p2(self):
        q = super_patalan_matrix(2, 1, 8)
        assert all(q[i][j] == q[j][i] for i in range(9) for j in range(9))

    @pytest.mark.parametrize("p,q", [(3, 1), (3, 2), (4, 1), (4, 3), (5, 2)])
    def test_integral(self, p, q):
        m = super_patalan_matrix(p, q, 6)
        assert all(v.denominator == 1 and v > 0 for row in m for v in row)

    def test_first_row(self):
        # g / f = -(1 - 9x)^(2/3) / x, whose constant term is 6
        m = super_patalan_matrix(3, 1, 4)
        assert m[0][0] == 1
        assert m[0][1] == -binom_rational(Fraction(2, 3), 1) * -9 == 6

    @pytest.mark.parametrize("p,q", [(2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (4, 3)])
    def test_duality(self, p, q):
        assert super_patalan_dual_check(p, q, 10)

    @pytest.mark.parametrize("p,q", [(3, 0), (3, 3), (2, 5), (1, 1)])
    def test_domain(self, p, q):
        with pytest.raises(PatalanDomainError):
            super_patalan_generators(p, q, 4)
        with pytest.raises(PatalanDomainError):
            PatalanSpec(p, q)
