from fractions import Fraction
from math import comb, gcd

import pytest
from hypothesis import given, strategies as st

from dendchar.arith import (
    NonIntegerResult,
    _as_int,
    a_val,
    b_val,
    bprime_val,
    catalan,
    check_crux,
    divisors,
    euler_phi,
    lambda_val,
    mobius,
    ramanujan_sum,
    sequence,
)

A_LIST = [1, 1, 3, 8, 25, 75, 245, 800, 2700, 9225]
B_LIST = [1, -1, -1, 1, 1, -1, -3, 4, 8, -13, -23, 39, 71, -121]
BPRIME_LIST = [1, 0, -1, 0, 1, 2, -3, -5, 8, 12, -23, -38, 71, 124]


def _mobius_brute(n: int) -> int:
    k, sign, p = n, 1, 2
    while p * p <= k:
        if k % p == 0:
            k //= p
            if k % p == 0:
                return 0
            sign = -sign
        p += 1
    return -sign if k > 1 else sign


@pytest.mark.parametrize("n, expected", [(0, 1), (3, 5), (9, 4862)])
def test_catalan(n, expected):
    assert catalan(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (4, 0), (6, 1)])
def test_mobius_examples(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (6, 2), (12, 4)])
def test_euler_phi_examples(n, expected):
    assert euler_phi(n) == expected


@pytest.mark.parametrize("n, expected", [(1, 1), (3, -2), (4, 3)])
def test_lambda_examples(n, expected):
    assert lambda_val(n) == expected


@given(st.integers(min_value=1, max_value=400))
def test_mobius_and_phi_against_brute_force(n):
    assert mobius(n) == _mobius_brute(n)
    assert euler_phi(n) == sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)
    assert divisors(n) == tuple(d for d in range(1, n + 1) if n % d == 0)


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=80))
def test_ramanujan_sum_is_power_sum_of_primitive_roots(d, j):
    import cmath

    total = sum(cmath.exp(2j * cmath.pi * k * j / d) for k in range(1, d + 1) if gcd(k, d) == 1)
    assert abs(total - ramanujan_sum(d, j)) < 1e-9
    assert ramanujan_sum(d, 0) == euler_phi(d)


def test_published_sequences():
    assert [a_val(n) for n in range(1, 11)] == A_LIST
    assert [b_val(n) for n in range(1, 15)] == B_LIST
    assert [bprime_val(n) for n in range(1, 15)] == BPRIME_LIST


@pytest.mark.parametrize("fn, n, expected", [
    (a_val, 1, 1), (a_val, 4, 8), (a_val, 10, 9225),
    (b_val, 1, 1), (b_val, 7, -3), (b_val, 14, -121),
    (bprime_val, 2, 0), (bprime_val, 6, 2), (bprime_val, 13, 71),
])
def test_single_values(fn, n, expected):
    assert fn(n) == expected


def test_sequence_ranges():
    assert sequence("a", 10) == A_LIST
    assert sequence("catalan", 4) == [1, 1, 2, 5, 14]
    assert sequence("lambda", 4) == [1, -1, -2, 3]
    with pytest.raises(ValueError):
        sequence("nope", 3)


@pytest.mark.parametrize("n", range(1, 65))
def test_mobius_round_trips(n):
    assert sum(2 * d * a_val(d) for d in divisors(n)) == comb(2 * n, n)
    assert sum(d * b_val(d) for d in divisors(n)) == lambda_val(n)
    assert a_val(n) > 0


def test_b_sign_pattern_matches_lambda():
    # observed, not proved; a failure lists the offending n
    off = [n for n in range(2, 65) if b_val(n) == 0 or (b_val(n) > 0) != (lambda_val(n) > 0)]
    assert off == [], f"sign(b_n) != sign(lambda(n)) at n = {off}"


@pytest.mark.parametrize("d", [2, 3, 4])
def test_crux_examples(d):
    assert check_crux(d)


def test_crux_upto_32():
    assert all(check_crux(d) for d in range(1, 33))


@pytest.mark.parametrize("n", range(2, 13))
def test_degree_identities(n):
    c = catalan(n - 1)
    assert 2 * n * c - sum(d * a_val(d) for d in divisors(n)) == c
    seq = b_val if n % 2 == 0 else bprime_val
    assert 2 * n * c - sum(d * seq(d) for d in divisors(2 * n)) == c


def test_non_integer_is_an_error():
    with pytest.raises(NonIntegerResult):
        _as_int(Fraction(1, 2), "x")
    with pytest.raises(ValueError):
        mobius(0)
