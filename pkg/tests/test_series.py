from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dendchar.arith import a_val, b_val, catalan
from dendchar.series import (
    TAYLOR_IDENTITIES,
    RationalSeries,
    catalan_series,
    fa_fb_relation_sides,
    fb_closed,
    product_form,
    series_exp,
    series_log,
    series_sqrt,
    taylor_check,
    taylor_sides,
    verify_fa_fb_relation,
)

ORDER = 12
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def _series_with_unit_constant(tail):
    return RationalSeries([1, *tail][:ORDER], ORDER)


def test_sqrt_binomial():
    f = series_sqrt(RationalSeries([1, -4], 6))
    assert [f[k] for k in range(5)] == [1, -2, -2, -4, -10]


def test_log_geometric():
    x = RationalSeries.x(8)
    f = series_log(1 / (1 - x))
    assert [f[k] for k in range(8)] == [0] + [Fraction(1, k) for k in range(1, 8)]


def test_product_with_inverse():
    x = RationalSeries.x(8)
    assert (1 - x) * (1 / (1 - x)) == RationalSeries.one(8)


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=ORDER - 1, max_size=ORDER - 1))
def test_sqrt_squares_back(tail):
    f = _series_with_unit_constant(tail)
    g = series_sqrt(f)
    assert g * g == f


@settings(max_examples=40, deadline=None)
@given(st.lists(fractions, min_size=ORDER - 1, max_size=ORDER - 1))
def test_log_exp_round_trip(tail):
    f = _series_with_unit_constant(tail)
    assert series_exp(series_log(f)) == f


@pytest.mark.parametrize("ident", sorted(TAYLOR_IDENTITIES))
def test_taylor_identities_to_30(ident):
    assert taylor_check(ident, 30)


def test_taylor_spot_values():
    left, right = taylor_sides("A1", 5)
    assert [left[k] for k in range(6)] == [comb(2 * k, k) for k in range(6)] == [right[k] for k in range(6)]
    left, right = taylor_sides("A3", 3)
    assert left[1] == right[1] == 1
    left, right = taylor_sides("A6", 3)
    assert left[1] == right[1] == 1


def test_product_form():
    fa = product_form(a_val, 5)
    assert [fa[k] for k in range(6)] == [1, 1, 2, 5, 14, 42]
    assert product_form(b_val, 3) == fb_closed(3)
    assert product_form({}, 4) == RationalSeries.one(5)


def test_product_form_to_30():
    fa = product_form(a_val, 30)
    assert fa == catalan_series(30)
    assert [fa[k] for k in range(31)] == [catalan(k) for k in range(31)]
    assert product_form(b_val, 30) == fb_closed(30)


@pytest.mark.parametrize("n", [1, 2, 10, 30])
def test_fa_fb_relation(n):
    assert verify_fa_fb_relation(n)


def test_fa_fb_relation_z2():
    lhs, rhs = fa_fb_relation_sides(4)
    assert lhs[2] == rhs[2] == -1


def test_unknown_identity():
    with pytest.raises(ValueError):
        taylor_check("A9", 3)
