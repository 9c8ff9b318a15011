from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqkit.series import (
    CompositionDomainError,
    LaurentSeries,
    NoReversionError,
    NotInvertibleError,
    OrderMismatchError,
    PowerSeries,
    ValuationError,
    binomial_series,
    laurent_int_pow,
    ps_compose,
    ps_derivative,
    ps_inverse,
    ps_mul,
    ps_revert,
)

from oracles import compose_by_powers, lagrange_reversion, naive_mul, naive_power

N = 16

small_ints = st.integers(min_value=-5, max_value=5)


@st.composite
def valuation_one(draw, order=N):
    lead = draw(st.sampled_from([1, -1]))
    rest = draw(st.lists(small_ints, min_size=order - 1, max_size=order - 1))
    return PowerSeries([0, lead] + rest)


@st.composite
def units(draw, order=10):
    c0 = draw(st.integers(1, 4)) * draw(st.sampled_from([1, -1]))
    rest = draw(st.lists(small_ints, min_size=order, max_size=order))
    return PowerSeries([c0] + rest)


def ps(*coeffs, order=None):
    order = len(coeffs) - 1 if order is None else order
    return PowerSeries.from_poly(coeffs, order)


class TestMul:
    def test_difference_of_squares(self):
        assert ps_mul(ps(1, 1, order=4), ps(1, -1, order=4)) == ps(1, 0, -1, order=4)

    def test_catalan_square(self):
        # brute-force convolution of the prefix 1, 1, 2, 5, 14
        prefix = [1, 1, 2, 5, 14]
        assert naive_mul(prefix, prefix) == [1, 2, 5, 14, 42]
        assert list(ps_mul(PowerSeries(prefix), PowerSeries(prefix))) == [1, 2, 5, 14, 42]

    @given(units())
    def test_identity(self, a):
        assert ps_mul(a, PowerSeries.one(a.order)) == a

    def test_order_mismatch(self):
        with pytest.raises(OrderMismatchError):
            ps_mul(ps(1, 1), ps(1, 1, 1))

    @given(st.lists(small_ints, min_size=6, max_size=6), st.lists(small_ints, min_size=6, max_size=6))
    def test_matches_naive(self, a, b):
        assert list(ps_mul(PowerSeries(a), PowerSeries(b))) == naive_mul(a, b)


class TestInverse:
    def test_geometric(self):
        assert list(ps_inverse(ps(1, -1, order=6))) == [1] * 7
        assert list(ps_inverse(ps(1, 1, order=6))) == [(-1) ** n for n in range(7)]

    def test_all_ones(self):
        assert list(ps_inverse(PowerSeries([1] * 6))) == [1, -1, 0, 0, 0, 0]

    def test_not_invertible(self):
        with pytest.raises(NotInvertibleError):
            ps_inverse(ps(0, 1))

    @given(units())
    def test_inverse_law(self, a):
        assert ps_mul(a, ps_inverse(a)) == PowerSeries.one(a.order)


class TestCompose:
    def test_identity_inner(self):
        g = ps(3, 1, 4, 1, 5)
        assert ps_compose(g, PowerSeries.x(4)) == g

    def test_identity_outer(self):
        f = ps(0, 2, 7, 1, 8)
        assert ps_compose(PowerSeries.x(4), f) == f

    def test_geometric_of_geometric(self):
        # 1/(1 - x/(1-x)) = (1-x)/(1-2x)
        g = PowerSeries([1] * 5)
        f = PowerSeries([0, 1, 1, 1, 1])
        assert compose_by_powers(list(g), list(f)) == [1, 1, 2, 4, 8]
        assert list(ps_compose(g, f)) == [1, 1, 2, 4, 8]

    def test_domain(self):
        with pytest.raises(CompositionDomainError):
            ps_compose(ps(1, 1), ps(1, 1))

    @settings(max_examples=30)
    @given(st.lists(small_ints, min_size=7, max_size=7), valuation_one(order=6))
    def test_matches_power_sum(self, g, f):
        assert list(ps_compose(PowerSeries(g), f)) == compose_by_powers(g, list(f))


class TestDerivative:
    def test_power_rule(self):
        assert ps_derivative(ps(1, 1, 1, order=4)) == ps(1, 2, order=3)

    def test_constant(self):
        assert ps_derivative(ps(7, order=3)) == PowerSeries.zero(2)

    def test_alternating(self):
        f = PowerSeries([0] + [(-1) ** n for n in range(6)])  # x/(1+x)
        assert list(ps_derivative(f)) == [1, -2, 3, -4, 5, -6]


class TestRevert:
    def test_identity(self):
        assert ps_revert(PowerSeries.x(8)) == PowerSeries.x(8)

    def test_catalan(self):
        rev = ps_revert(ps(0, 1, -1, order=8))
        assert list(rev) == [0, 1, 1, 2, 5, 14, 42, 132, 429]
        assert lagrange_reversion([0, 1, -1], 8) == list(rev)

    def test_geometric(self):
        rev = ps_revert(PowerSeries([0] + [1] * 8))
        assert list(rev) == [0] + [(-1) ** n for n in range(8)]
        assert ps_compose(rev, PowerSeries([0] + [1] * 8)) == PowerSeries.x(8)

    @pytest.mark.parametrize("f", [ps(1, 1), ps(0, 0, 1)])
    def test_no_reversion(self, f):
        with pytest.raises(NoReversionError):
            ps_revert(f)

    @settings(max_examples=25, deadline=None)
    @given(valuation_one())
    def test_round_trip(self, f):
        b = ps_revert(f)
        assert ps_compose(b, f) == PowerSeries.x(N)
        assert ps_compose(f, b) == PowerSeries.x(N)

    @settings(max_examples=15, deadline=None)
    @given(valuation_one())
    def test_lagrange(self, f):
        assert list(ps_revert(f)) == lagrange_reversion(list(f), N)


class TestLaurent:
    def test_x_inverse(self):
        inv = laurent_int_pow(PowerSeries.x(5), -1)
        assert inv.valuation == -1
        assert inv[-1] == 1 and all(inv[n] == 0 for n in range(0, inv.order + 1))

    def test_geometric_inverse(self):
        inv = laurent_int_pow(PowerSeries([0, 1, 1, 1, 1, 1]), -1)
        assert inv.valuation == -1
        assert [inv[n] for n in range(-1, inv.order + 1)] == [1, -1, 0, 0, 0]

    def test_zero_power(self):
        one = laurent_int_pow(ps(0, 3, 1, order=5), 0)
        assert one.valuation == 0 and one[0] == 1 and not any(one.coeffs[1:])

    def test_valuation_error(self):
        with pytest.raises(ValuationError):
            laurent_int_pow(ps(1, 1), -1)
        with pytest.raises(ValuationError):
            laurent_int_pow(ps(0, 0, 1), 2)

    def test_positive_powers_match_mul(self):
        f = ps(0, 2, -1, 3, order=8)
        for k in range(1, 5):
            lp = laurent_int_pow(f, k)
            assert lp.valuation == k
            assert [lp[n] for n in range(9)] == list(f ** k)

    def test_inverse_pair(self):
        f = ps(0, 2, -1, 3, order=8)
        for k in range(1, 4):
            prod = laurent_int_pow(f, k) * laurent_int_pow(f, -k)
            assert prod.valuation == 0 and prod[0] == 1
            assert all(prod[n] == 0 for n in range(1, prod.order + 1))

    @settings(max_examples=20, deadline=None)
    @given(valuation_one(order=8), st.integers(-4, 4), st.integers(-4, 4))
    def test_group_law(self, f, j, k):
        lhs = laurent_int_pow(f, j) * laurent_int_pow(f, k)
        rhs = laurent_int_pow(f, j + k)
        assert lhs.valuation == rhs.valuation == j + k
        for n in range(j + k, min(lhs.order, rhs.order) + 1):
            assert lhs[n] == rhs[n]

    def test_product_valuation(self):
        a = LaurentSeries(-2, [1, 5, 0, 1])
        b = LaurentSeries(3, [2, 1])
        assert (a * b).valuation == 1

    def test_json_round_trip(self):
        s = laurent_int_pow(ps(0, 1, 1, order=6), -3)
        assert LaurentSeries.from_json(s.to_json()) == s


class TestBinomialSeries:
    def test_linear(self):
        assert list(binomial_series(1, Fraction(2, 3), 4)) == [1, Fraction(2, 3), 0, 0, 0]

    def test_central_binomials(self):
        assert list(binomial_series(Fraction(-1, 2), -4, 4)) == [1, 2, 6, 20, 70]

    def test_third_power(self):
        assert list(binomial_series(Fraction(-1, 3), -9, 3)) == [1, 3, 18, 126]

    @given(st.integers(0, 6), st.integers(-3, 3))
    def test_integer_alpha(self, alpha, c):
        order = 8
        assert list(binomial_series(alpha, c, order)) == naive_power([1, c], alpha, order + 1)


def test_json_round_trip():
    s = PowerSeries([Fraction(-3, 4), 0, 5])
    obj = s.to_json()
    assert obj == {"order": 2, "coeffs": ["-3/4", "0/1", "5/1"]}
    assert PowerSeries.from_json(obj) == s


def test_rejects_floats():
    with pytest.raises(TypeError):
        PowerSeries([0.5])
