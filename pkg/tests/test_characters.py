from fractions import Fraction

import pytest

from dendchar.arith import a_val, catalan, divisors
from dendchar.characters import (
    NotADivisor,
    dend_consistency,
    dend_consistency_report,
    dend_cyclic_character,
    dias_schur_check,
    induce_to_symmetric,
    injectivity_check,
    m_nd_character,
    module_identity_sides,
    verify_module_identity,
)
from dendchar.spectra import DEFAULT_MAX_LEAVES
from dendchar.symfunc import PowerSumPoly

H = Fraction(1, 2)


@pytest.mark.parametrize("d, values", [(4, (4, 0, 0, 0)), (2, (2, 0, 2, 0)), (1, (1, 1, 1, 1))])
def test_m_nd(d, values):
    assert m_nd_character(4, d).values == values


def test_not_a_divisor():
    with pytest.raises(NotADivisor):
        m_nd_character(4, 3)


def test_induction_examples():
    assert induce_to_symmetric(2, 1) == PowerSumPoly({(1, 1): H, (2,): H}, 2)
    assert induce_to_symmetric(2, 2) == PowerSumPoly({(1, 1): 1}, 2)
    assert induce_to_symmetric(4, 2) == PowerSumPoly({(1, 1, 1, 1): H, (2, 2): H}, 4)


@pytest.mark.parametrize("n", range(1, 13))
def test_regular_representation(n):
    assert induce_to_symmetric(n, n) == PowerSumPoly({(1,) * n: 1}, n)


@pytest.mark.parametrize("n", range(1, 25))
def test_injectivity(n):
    assert injectivity_check(n)


def test_module_identity_small():
    left, right = module_identity_sides(1)
    assert left == right == PowerSumPoly({(1,): 1}, 1)
    left, right = module_identity_sides(2)
    assert left == PowerSumPoly({(1, 1): Fraction(3, 2), (2,): H}, 2) == right


@pytest.mark.parametrize("n", range(1, 13))
def test_module_identity(n):
    assert verify_module_identity(n)


def test_dend_small():
    r2 = dend_consistency_report(2)
    assert r2["character"] == [1, -1] and r2["traces"] == [1, -1]
    r3 = dend_consistency_report(3)
    assert r3["character"] == [2, -1, -1] and r3["traces"] == [2, -1, -1]


@pytest.mark.parametrize("n", range(1, 13))
def test_dend_dimension(n):
    c = catalan(n - 1)
    assert 2 * n * c - sum(d * a_val(d) for d in divisors(n)) == c
    assert dend_cyclic_character(n).dimension == c


@pytest.mark.parametrize("n", range(1, DEFAULT_MAX_LEAVES + 1))
def test_dend_consistency_against_traces(n):
    r = dend_consistency_report(n)
    assert r["passed"]
    assert n == 1 or r["traces_ok"] is True
    assert dend_consistency(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_dias(n):
    assert dias_schur_check(n)
