import pytest
from hypothesis import given, strategies as st

from dendchar.poly import (
    FactoredForm,
    IntPolynomial,
    NotAPolynomial,
    cyclotomic,
    cyclotomic_multiplicities,
    format_cyclotomic,
)

coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=8)


def test_basic_arithmetic_and_str():
    t = IntPolynomial([0, 1])
    one = IntPolynomial([1])
    assert (t + one) * (t - one) == IntPolynomial([-1, 0, 1])
    assert str(IntPolynomial([1, 1, 2])) == "1 + t + 2*t^2"
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)


@given(coeff_lists, st.integers(1, 6))
def test_t_power_minus_one_round_trip(cs, d):
    p = IntPolynomial(cs)
    q = p.mul_t_power_minus_one(d)
    assert q == p * IntPolynomial.t_power_minus_one(d)
    assert q.div_t_power_minus_one(d) == p


def test_inexact_division_raises():
    with pytest.raises(NotAPolynomial):
        IntPolynomial([1, 1]).div_t_power_minus_one(2)


@pytest.mark.parametrize("d, coeffs", [
    (1, [-1, 1]), (2, [1, 1]), (3, [1, 1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1]), (8, [1, 0, 0, 0, 1]),
])
def test_cyclotomic(d, coeffs):
    assert cyclotomic(d) == IntPolynomial(coeffs)


@pytest.mark.parametrize("exps, coeffs", [
    ({3: 1, 1: -1}, [1, 1, 1]),
    ({4: 2, 1: -1, 2: -1}, [1, 1, 2, 2, 1, 1]),
])
def test_expand(exps, coeffs):
    assert FactoredForm(exps).expand() == IntPolynomial(coeffs)


def test_expand_non_polynomial():
    with pytest.raises(NotAPolynomial):
        FactoredForm({1: -1}).expand()


def test_factored_form_normalises():
    assert FactoredForm([(2, 1), (2, -1), (3, 2)]) == FactoredForm({3: 2})
    assert str(FactoredForm({3: 1, 1: -1})) == "(t^3-1) / ((t-1))"


def test_cyclotomic_round_trip():
    f = FactoredForm({4: 2, 1: -1, 2: -1})
    mult = f.cyclotomic_multiplicities()
    assert mult == {2: 1, 4: 2}
    assert FactoredForm.from_cyclotomic(mult) == f
    assert cyclotomic_multiplicities(f.expand(), 8) == mult
    assert format_cyclotomic(mult) == "Phi_2 * Phi_4^2"
