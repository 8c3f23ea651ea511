"""Symmetric functions in the power-sum basis, truncated by degree.

A :class:`PowerSumPoly` maps partitions (weakly decreasing tuples) to exact
rationals; the empty partition is the constant term.  Plethysm goes through
the substitution p_d -> p_{kd}, which is all the named series below need.
Schur coefficients come from the Murnaghan-Nakayama rule.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .arith import catalan, divisors, euler_phi, lambda_val, mobius

__all__ = [
    "Partition",
    "TruncationMismatch",
    "ConstantTermError",
    "DegreeTooLarge",
    "SCHUR_MAX_DEGREE",
    "partitions",
    "z_lambda",
    "PowerSumPoly",
    "SchurExpansion",
    "p",
    "psum_add",
    "psum_mul",
    "plethysm",
    "lie_series",
    "brace_series",
    "z_series",
    "com_series",
    "geometric_p1_series",
    "lie_brace_closed",
    "lie_z_closed",
    "invariants_dim",
    "mn_character",
    "to_schur",
    "dend_character",
]

Partition = tuple[int, ...]

SCHUR_MAX_DEGREE = 14


class TruncationMismatch(ValueError):
    """Binary operation on series truncated at different degrees."""


class ConstantTermError(ValueError):
    """Plethysm f o g with g having a nonzero constant term."""


class DegreeTooLarge(ValueError):
    """Schur expansion requested beyond the configured degree bound."""


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def z_lambda(lam: Partition) -> int:
    """Size of the centralizer of a permutation of cycle type ``lam``."""
    z = 1
    for part in set(lam):
        m = lam.count(part)
        z *= part**m * factorial(m)
    return z


def _merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


def _check_partition(lam: Iterable[int]) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(x < 1 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    return tuple(sorted(lam, reverse=True))


class PowerSumPoly:
    """Sum of c_lambda p_lambda over partitions of weight <= ``truncation``."""

    __slots__ = ("coeffs", "truncation")

    def __init__(self, coeffs: Mapping[Iterable[int], object] | None = None, truncation: int = 1):
        if truncation < 1:
            raise ValueError("truncation degree must be positive")
        self.truncation = truncation
        acc: dict[Partition, Fraction] = {}
        for lam, c in (coeffs or {}).items():
            lam = _check_partition(lam)
            if sum(lam) > truncation:
                continue
            acc[lam] = acc.get(lam, Fraction(0)) + Fraction(c)
        self.coeffs: dict[Partition, Fraction] = {k: v for k, v in acc.items() if v}

    @classmethod
    def _raw(cls, coeffs: dict[Partition, Fraction], truncation: int) -> PowerSumPoly:
        obj = cls.__new__(cls)
        obj.truncation = truncation
        obj.coeffs = {k: v for k, v in coeffs.items() if v}
        return obj

    @classmethod
    def constant(cls, c, truncation: int) -> PowerSumPoly:
        return cls({(): c}, truncation)

    @classmethod
    def zero(cls, truncation: int) -> PowerSumPoly:
        return cls._raw({}, truncation)

    def _check(self, other: PowerSumPoly) -> None:
        if self.truncation != other.truncation:
            raise TruncationMismatch(f"truncations differ: {self.truncation} vs {other.truncation}")

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSumPoly):
            return self.truncation == other.truncation and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[tuple[Partition, Fraction]]:
        return iter(sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0]))))

    def __getitem__(self, lam: Iterable[int]) -> Fraction:
        return self.coeffs.get(_check_partition(lam), Fraction(0))

    def __add__(self, other: PowerSumPoly) -> PowerSumPoly:
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PowerSumPoly._raw(out, self.truncation)

    def __neg__(self) -> PowerSumPoly:
        return PowerSumPoly._raw({k: -v for k, v in self.coeffs.items()}, self.truncation)

    def __sub__(self, other: PowerSumPoly) -> PowerSumPoly:
        return self + (-other)

    def scale(self, c) -> PowerSumPoly:
        c = Fraction(c)
        return PowerSumPoly._raw({k: v * c for k, v in self.coeffs.items()}, self.truncation)

    def __mul__(self, other):
        if not isinstance(other, PowerSumPoly):
            return self.scale(other)
        self._check(other)
        n = self.truncation
        out: dict[Partition, Fraction] = {}
        right = [(lam, sum(lam), c) for lam, c in other.coeffs.items()]
        for lam, c in self.coeffs.items():
            w = sum(lam)
            for mu, wm, d in right:
                if w + wm <= n:
                    key = _merge(lam, mu)
                    out[key] = out.get(key, Fraction(0)) + c * d
        return PowerSumPoly._raw(out, n)

    def __rmul__(self, c):
        return self.scale(c)

    def homogeneous(self, n: int) -> PowerSumPoly:
        return PowerSumPoly._raw({k: v for k, v in self.coeffs.items() if sum(k) == n}, self.truncation)

    def degrees(self) -> list[int]:
        return sorted({sum(k) for k in self.coeffs})

    def constant_term(self) -> Fraction:
        return self.coeffs.get((), Fraction(0))

    def with_truncation(self, n: int) -> PowerSumPoly:
        return PowerSumPoly._raw({k: v for k, v in self.coeffs.items() if sum(k) <= n}, n)

    def substitute_scale(self, k: int) -> PowerSumPoly:
        """p_k o self: replace every p_d by p_{kd}, dropping terms past the truncation."""
        n = self.truncation
        out = {}
        for lam, c in self.coeffs.items():
            if k * sum(lam) <= n:
                out[tuple(k * x for x in lam)] = c
        return PowerSumPoly._raw(out, n)

    def __repr__(self) -> str:
        return f"PowerSumPoly({self}, truncation={self.truncation})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for lam, c in self:
            mono = "p" + str(list(lam)).replace(" ", "") if lam else ""
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")


def p(*parts: int, truncation: int) -> PowerSumPoly:
    """The monomial p_lambda."""
    return PowerSumPoly({tuple(parts): 1}, truncation)


def psum_add(f: PowerSumPoly, g: PowerSumPoly) -> PowerSumPoly:
    return f + g


def psum_mul(f: PowerSumPoly, g: PowerSumPoly) -> PowerSumPoly:
    return f * g


def plethysm(f: PowerSumPoly, g: PowerSumPoly) -> PowerSumPoly:
    """f o g, extended multiplicatively over the p-monomials of f.

    Coefficients of f are scalars and pass through unchanged.
    """
    f._check(g)
    if g.constant_term() != 0:
        raise ConstantTermError("inner argument of a plethysm must have zero constant term")
    n = f.truncation
    if not g:
        return PowerSumPoly.constant(f.constant_term(), n)
    low = min(sum(lam) for lam in g.coeffs)
    scaled: dict[int, PowerSumPoly] = {}
    memo: dict[Partition, PowerSumPoly] = {(): PowerSumPoly.constant(1, n)}

    def power(lam: Partition) -> PowerSumPoly:
        # lam is sorted decreasing; peel off the largest part
        if lam not in memo:
            k = lam[0]
            if k not in scaled:
                scaled[k] = g.substitute_scale(k)
            memo[lam] = scaled[k] * power(lam[1:])
        return memo[lam]

    out = PowerSumPoly.zero(n)
    for lam, c in f.coeffs.items():
        if low * sum(lam) > n:
            continue
        out = out + power(lam).scale(c)
    return out


def lie_series(n: int) -> PowerSumPoly:
    coeffs = {}
    for k in range(1, n + 1):
        for d in divisors(k):
            if mobius(d):
                coeffs[(d,) * (k // d)] = Fraction(mobius(d), k)
    return PowerSumPoly(coeffs, n)


def brace_series(n: int) -> PowerSumPoly:
    return PowerSumPoly({(1,) * k: Fraction(comb(2 * k - 2, k - 1), k) for k in range(1, n + 1)}, n)


def z_series(n: int) -> PowerSumPoly:
    coeffs = {(1,): Fraction(1)}
    k = 0
    while 2 * k + 2 <= n:
        coeffs[(1,) * (2 * k + 2)] = Fraction((-1) ** (k + 1) * comb(2 * k, k), k + 1)
        k += 1
    return PowerSumPoly(coeffs, n)


def com_series(n: int) -> PowerSumPoly:
    """h_1 + h_2 + ... + h_n, each h_k = sum p_lambda / z_lambda."""
    return PowerSumPoly(
        {lam: Fraction(1, z_lambda(lam)) for k in range(1, n + 1) for lam in partitions(k)}, n
    )


def geometric_p1_series(n: int) -> PowerSumPoly:
    """1/(1 - p_1) = sum_{k >= 0} p_1^k."""
    return PowerSumPoly({(1,) * k: 1 for k in range(n + 1)}, n)


def lie_brace_closed(n: int) -> PowerSumPoly:
    coeffs: dict[Partition, Fraction] = {}
    for k in range(1, n + 1):
        for d in divisors(k):
            if mobius(d):
                coeffs[(d,) * (k // d)] = Fraction(mobius(d) * comb(2 * k // d, k // d), 2 * k)
    return PowerSumPoly(coeffs, n)


def lie_z_closed(n: int) -> PowerSumPoly:
    coeffs: dict[Partition, Fraction] = {}
    for k in range(1, n + 1):
        for d in divisors(k):
            if mobius(d):
                coeffs[(d,) * (k // d)] = Fraction(mobius(d) * lambda_val(k // d), k)
    return PowerSumPoly(coeffs, n)


def invariants_dim(f: PowerSumPoly, n: int) -> Fraction:
    """Degree-n component of f evaluated at p_d = 1 for every d."""
    if n > f.truncation:
        raise ValueError(f"degree {n} is past the truncation {f.truncation}")
    return sum((c for lam, c in f.coeffs.items() if sum(lam) == n), Fraction(0))


def dend_character(n: int) -> PowerSumPoly:
    """Degree-n symmetric function of the module induced from the cyclic action on Dend(n-1)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs: dict[Partition, Fraction] = {(1,) * n: Fraction(2 * catalan(n - 1))}
    for d in divisors(n):
        lam = (d,) * (n // d)
        coeffs[lam] = coeffs.get(lam, Fraction(0)) - Fraction(euler_phi(d) * comb(2 * n // d, n // d), 2 * n)
    return PowerSumPoly(coeffs, n)


# --- Schur functions via Murnaghan-Nakayama -------------------------------


def _beta(lam: Partition) -> tuple[int, ...]:
    """Beta-numbers lam_i + (len - i - 1): distinct, decreasing."""
    m = len(lam)
    return tuple(lam[i] + m - 1 - i for i in range(m))


def _from_beta(beta: Iterable[int]) -> Partition:
    b = sorted(beta, reverse=True)
    m = len(b)
    lam = tuple(b[i] - (m - 1 - i) for i in range(m))
    return tuple(x for x in lam if x > 0)


@lru_cache(maxsize=None)
def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on the class of cycle type ``mu``.

    Removing a border strip of length k from lam is sliding one bead of the
    beta-set down by k onto an empty position; the sign is (-1)^(height), the
    number of beads jumped over.
    """
    if sum(lam) != sum(mu):
        raise ValueError("lam and mu must have the same weight")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beta = _beta(lam)
    occupied = set(beta)
    total = 0
    for b in beta:
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for x in beta if target < x < b)
        new = [x for x in beta if x != b] + [target]
        total += (-1) ** height * mn_character(_from_beta(new), rest)
    return total


class SchurExpansion:
    """Homogeneous symmetric function of a fixed degree in the Schur basis."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Mapping[Partition, Fraction], degree: int):
        for lam in coeffs:
            if sum(lam) != degree:
                raise ValueError(f"{lam} does not have weight {degree}")
        self.degree = degree
        self.coeffs: dict[Partition, Fraction] = {lam: Fraction(c) for lam, c in coeffs.items() if c}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SchurExpansion):
            return self.degree == other.degree and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs.values())

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def sign(self) -> int | None:
        """+1 or -1 when every coefficient shares that sign, 0 for zero, else None."""
        signs = {1 if c > 0 else -1 for c in self.coeffs.values()}
        if not signs:
            return 0
        return signs.pop() if len(signs) == 1 else None

    def __repr__(self) -> str:
        body = ", ".join(f"{list(lam)}: {c}" for lam, c in sorted(self.coeffs.items(), reverse=True))
        return f"SchurExpansion({{{body}}}, degree={self.degree})"


def to_schur(f: PowerSumPoly, n: int, max_degree: int = SCHUR_MAX_DEGREE) -> SchurExpansion:
    """Schur expansion of the degree-n component: s_lam coefficient = sum_mu c_mu chi^lam(mu)."""
    if n > max_degree:
        raise DegreeTooLarge(f"degree {n} exceeds the Schur bound {max_degree}")
    if n > f.truncation:
        raise ValueError(f"degree {n} is past the truncation {f.truncation}")
    comp = [(mu, c) for mu, c in f.coeffs.items() if sum(mu) == n]
    coeffs = {}
    for lam in partitions(n):
        coeffs[lam] = sum((c * mn_character(lam, mu) for mu, c in comp), Fraction(0))
    return SchurExpansion(coeffs, n)
