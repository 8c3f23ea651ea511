"""Number-theoretic helpers and the integer sequences a_n, b_n, b'_n, lambda(n).

Every sequence value goes through an exact rational reduction followed by an
integrality assertion, so a wrong formula shows up as ``NonIntegerResult``
instead of a silently truncated integer.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

__all__ = [
    "NonIntegerResult",
    "SequenceTable",
    "catalan",
    "factorize",
    "divisors",
    "mobius",
    "euler_phi",
    "ramanujan_sum",
    "lambda_val",
    "a_val",
    "b_val",
    "bprime_val",
    "check_crux",
    "sequence",
    "SEQUENCE_KINDS",
]


class NonIntegerResult(ArithmeticError):
    """An expression that must be an integer reduced to a proper fraction."""


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"{what} = {value} is not an integer")
    return value.numerator


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan(n) needs n >= 0")
    return _as_int(Fraction(comb(2 * n, n), n + 1), f"catalan({n})")


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of ``n`` by trial division, as ((p, e), ...)."""
    if n < 1:
        raise ValueError("factorize needs n >= 1")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    if n < 1:
        raise ValueError("divisors needs n >= 1")
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def ramanujan_sum(d: int, j: int) -> int:
    """Sum of the j-th powers of the primitive d-th roots of unity.

    c_d(j) = sum over e | gcd(d, j) of mu(d/e) * e, with gcd(d, 0) = d.
    """
    g = gcd(d, j)
    return sum(mobius(d // e) * e for e in divisors(g))


def lambda_val(n: int) -> int:
    if n < 1:
        raise ValueError("lambda_val needs n >= 1")
    sign = -1 if comb(n, 2) % 2 else 1
    return sign * comb(n - 1, -(-(n - 1) // 2))


class SequenceTable:
    """Append-only memo of sequence values keyed by index.

    Values are computed on first request under a lock and never overwritten,
    so a table can be shared between threads.
    """

    def __init__(self, kind: str, compute):
        self.kind = kind
        self._compute = compute
        self._values: dict[int, int] = {}
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        try:
            return self._values[n]
        except KeyError:
            pass
        if n < 1:
            raise ValueError(f"{self.kind} sequence is indexed from 1")
        value = self._compute(n)
        with self._lock:
            return self._values.setdefault(n, value)

    @property
    def values(self) -> dict[int, int]:
        return dict(self._values)

    def upto(self, n: int) -> list[int]:
        return [self[k] for k in range(1, n + 1)]


def _a(n: int) -> int:
    total = sum(mobius(n // d) * comb(2 * d, d) for d in divisors(n))
    value = _as_int(Fraction(total, 2 * n), f"a_{n}")
    if value <= 0:
        raise ArithmeticError(f"a_{n} = {value} is not positive")
    return value


def _b(n: int) -> int:
    total = sum(mobius(d) * lambda_val(n // d) for d in divisors(n))
    return _as_int(Fraction(total, n), f"b_{n}")


def _bprime(n: int) -> int:
    if n % 2:
        return B[n]
    return -B[n] - B[n // 2]


A = SequenceTable("a", _a)
B = SequenceTable("b", _b)
BPRIME = SequenceTable("bprime", _bprime)


def a_val(n: int) -> int:
    return A[n]


def b_val(n: int) -> int:
    return B[n]


def bprime_val(n: int) -> int:
    return BPRIME[n]


def check_crux(d: int) -> bool:
    """Relation between a_d and b that makes the theta and tau char polys agree."""
    a, b = a_val, b_val
    if d % 2:
        return a(d) == -2 * b(2 * d) - b(d)
    if d % 4 == 0:
        return a(d) == 2 * b(2 * d)
    return a(d) == 2 * b(2 * d) + 2 * b(d) + b(d // 2)


SEQUENCE_KINDS = {
    "catalan": catalan,
    "a": a_val,
    "b": b_val,
    "bprime": bprime_val,
    "lambda": lambda_val,
}


def sequence(kind: str, upto: int) -> list[int]:
    """Terms of a named sequence for indices up to ``upto`` inclusive.

    Catalan numbers start at index 0, every other sequence at index 1.
    """
    try:
        fn = SEQUENCE_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown sequence {kind!r}") from None
    start = 0 if kind == "catalan" else 1
    return [fn(k) for k in range(start, upto + 1)]
