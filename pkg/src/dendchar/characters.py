"""Characters of the cyclic modules M_{n,d} = Q[t]/(t^d - 1) and their induction
to the symmetric group, plus the reconciliation with matrix traces of tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .arith import a_val, catalan, divisors, euler_phi
from .spectra import DEFAULT_MAX_LEAVES, power_traces, tau_matrix
from .symfunc import PowerSumPoly, to_schur

__all__ = [
    "NotADivisor",
    "CyclicCharacter",
    "m_nd_character",
    "induce_to_symmetric",
    "induction_matrix",
    "injectivity_check",
    "module_identity_sides",
    "verify_module_identity",
    "dend_cyclic_character",
    "dend_consistency",
    "dend_consistency_report",
    "dias_character",
    "dias_schur_check",
]


class NotADivisor(ValueError):
    """d does not divide n."""


@dataclass(frozen=True)
class CyclicCharacter:
    """Values chi(t^k) for k = 0 .. n-1 of a character of the cyclic group C_n."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.n:
            raise ValueError(f"need {self.n} values, got {len(self.values)}")

    @property
    def dimension(self) -> int:
        return self.values[0]

    def __add__(self, other: CyclicCharacter) -> CyclicCharacter:
        if self.n != other.n:
            raise ValueError("characters of different groups")
        return CyclicCharacter(self.n, tuple(a + b for a, b in zip(self.values, other.values)))

    def scale(self, c: int) -> CyclicCharacter:
        return CyclicCharacter(self.n, tuple(c * v for v in self.values))

    def invariants(self) -> Fraction:
        """Multiplicity of the trivial character: the average of the values."""
        return Fraction(sum(self.values), self.n)


def _check_divisor(n: int, d: int) -> None:
    if n < 1 or d < 1 or n % d:
        raise NotADivisor(f"{d} does not divide {n}")


def m_nd_character(n: int, d: int) -> CyclicCharacter:
    """chi(t^k) = d if d | k else 0."""
    _check_divisor(n, d)
    return CyclicCharacter(n, tuple(d if k % d == 0 else 0 for k in range(n)))


def induce_to_symmetric(n: int, d: int, truncation: int | None = None) -> PowerSumPoly:
    """(d/n) sum_{l | n/d} phi(l) p_l^{n/l}."""
    _check_divisor(n, d)
    coeffs = {(l,) * (n // l): Fraction(d * euler_phi(l), n) for l in divisors(n // d)}
    return PowerSumPoly(coeffs, truncation or n)


def induction_matrix(n: int) -> tuple[list[int], list[list[Fraction]]]:
    """Rows: chi'_{n,d}; columns: coefficient of p_l^{n/l}; both indexed by divisors of n."""
    divs = list(divisors(n))
    rows = []
    for d in divs:
        chi = induce_to_symmetric(n, d)
        rows.append([chi[(l,) * (n // l)] for l in divs])
    return divs, rows


def _rank(rows: list[list[Fraction]]) -> int:
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][col] / m[rank][col]
            if f:
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def injectivity_check(n: int) -> bool:
    """The chi'_{n,d} are linearly independent.

    Row d is supported on the monomials p_l^{n/l} with l | n/d, and its entry
    at l = n/d is d phi(n/d) / n != 0.  Pairing row d with column n/d, the
    matrix is triangular for divisibility with a nonzero diagonal; the rank
    is computed as well so the check does not rest on that argument alone.
    """
    divs, rows = induction_matrix(n)
    col_of = {l: i for i, l in enumerate(divs)}
    for i, d in enumerate(divs):
        diag = rows[i][col_of[n // d]]
        if diag == 0:
            return False
        for l in divs:
            # triangular: nonzero only when l divides n/d
            if (n // d) % l and rows[i][col_of[l]] != 0:
                return False
    return _rank(rows) == len(divs)


def module_identity_sides(n: int) -> tuple[PowerSumPoly, PowerSumPoly]:
    left = PowerSumPoly.zero(n)
    for d in divisors(n):
        left = left + induce_to_symmetric(n, d).scale(a_val(d))
    right = PowerSumPoly(
        {(d,) * (n // d): Fraction(euler_phi(d) * comb(2 * n // d, n // d), 2 * n) for d in divisors(n)}, n
    )
    return left, right


def verify_module_identity(n: int) -> bool:
    """sum_{d | n} a_d chi'_{n,d} equals the second term of the dendriform character."""
    left, right = module_identity_sides(n)
    return left == right


def dend_cyclic_character(n: int) -> CyclicCharacter:
    """2 c_{n-1} chi_{n,n} - sum_{d | n} a_d chi_{n,d}."""
    chi = m_nd_character(n, n).scale(2 * catalan(n - 1))
    for d in divisors(n):
        chi = chi + m_nd_character(n, d).scale(-a_val(d))
    return chi


def dend_consistency_report(n: int, spectra_cap: int = DEFAULT_MAX_LEAVES) -> dict:
    """Cyclic character of Dend(n-1) checked for integrality, dimension c_{n-1},
    and, for n <= ``spectra_cap``, against tr(tau^k) for k = 0 .. n-1.
    """
    chi = dend_cyclic_character(n)
    integral = all(isinstance(v, int) for v in chi.values)
    dim_ok = chi.dimension == catalan(n - 1)
    traces = None
    traces_ok = None
    if 2 <= n <= spectra_cap:
        traces = power_traces(tau_matrix(n), n)
        traces_ok = traces == list(chi.values)
    return {
        "n": n,
        "character": list(chi.values),
        "traces": traces,
        "integral": integral,
        "dimension_ok": dim_ok,
        "traces_ok": traces_ok,
        "passed": integral and dim_ok and traces_ok is not False,
    }


def dend_consistency(n: int, spectra_cap: int = DEFAULT_MAX_LEAVES) -> bool:
    return dend_consistency_report(n, spectra_cap)["passed"]


def dias_character(n: int) -> PowerSumPoly:
    return induce_to_symmetric(n, n) - induce_to_symmetric(n, 1)


def dias_schur_check(n: int) -> bool:
    """chi'_{n,n} - chi'_{n,1} has nonnegative integer Schur coefficients."""
    s = to_schur(dias_character(n), n)
    return s.is_integral() and s.is_nonnegative()
