"""Coxeter transformation of the Tamari poset, the order-n matrix tau, and
exact characteristic polynomials.

Two independent routes to det(tI - M):

* :func:`charpoly_direct` -- Berkowitz, division free, works for any square
  integer matrix; O(dim^4) so it is the oracle for small lattices.
* :func:`charpoly_finite_order` -- for M with M^k = I: traces of M^0..M^{k-1}
  determine the multiplicity of every primitive d-th root of unity through
  Ramanujan sums; needs only k matrix products.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .arith import a_val, b_val, bprime_val, catalan, divisors, ramanujan_sum
from .matrix import ExactMatrix
from .poly import FactoredForm, IntPolynomial, cyclotomic, format_cyclotomic
from .tamari import MAX_LEAVES, build_lattice, order_matrix

__all__ = [
    "NotFiniteOrder",
    "NonIntegerMultiplicity",
    "OrderCheckFailed",
    "coxeter_matrix",
    "theta_matrix",
    "tau_matrix",
    "multiplicative_order",
    "charpoly_direct",
    "charpoly_finite_order",
    "finite_order_multiplicities",
    "power_traces",
    "theorem_form",
    "expand_factored",
    "conjecture_form",
    "substitute_square",
    "substitute_negate",
    "tau_form_from_conjecture",
    "SpectralReport",
    "verify_theorem",
    "verify_conjecture",
    "BERKOWITZ_MAX_DIM",
    "TRACE_MAX_DIM",
    "DEFAULT_MAX_LEAVES",
    "matrix_to_lists",
    "describe",
    "eigen_angles",
]

BERKOWITZ_MAX_DIM = 132
TRACE_MAX_DIM = 1430
DEFAULT_MAX_LEAVES = 8


class NotFiniteOrder(ArithmeticError):
    """M^k != I for the order bound handed to the trace method."""


class NonIntegerMultiplicity(ArithmeticError):
    """Trace data did not come from a diagonalizable finite-order matrix."""


class OrderCheckFailed(ArithmeticError):
    """tau^n != I: orientation or arithmetic is broken."""


def coxeter_matrix(lattice) -> ExactMatrix:
    """theta = -C (C^T)^{-1} for the order matrix C of ``lattice``."""
    c = order_matrix(lattice)
    c_inv = c.inverse_unitriangular()
    return -(c @ c_inv.T)


@lru_cache(maxsize=16)
def theta_matrix(n_leaves: int, max_leaves: int = MAX_LEAVES) -> ExactMatrix:
    return coxeter_matrix(build_lattice(n_leaves, max_leaves))


@lru_cache(maxsize=16)
def tau_matrix(n: int, max_leaves: int = MAX_LEAVES) -> ExactMatrix:
    """(-1)^{n+1} theta^2 on trees with n leaves; checked to satisfy tau^n = I."""
    if n < 2:
        raise ValueError("tau is defined for n >= 2 leaves")
    theta = theta_matrix(n, max_leaves)
    sq = theta @ theta
    tau = sq if n % 2 else -sq
    if not (tau**n).is_identity():
        raise OrderCheckFailed(f"tau^{n} != I for n = {n}")
    return tau


def multiplicative_order(m: ExactMatrix, limit: int) -> int | None:
    """Smallest k <= limit with m^k = I, or None."""
    p = m
    for k in range(1, limit + 1):
        if p.is_identity():
            return k
        p = p @ m
    return None


def charpoly_direct(m: ExactMatrix) -> IntPolynomial:
    """det(tI - M) by the Berkowitz algorithm (no divisions).

    With A_k the leading k x k block, A_k = [[A_{k-1}, c], [r, a]], the
    coefficient vector of p_k is a lower Toeplitz matrix with first column
    (1, -a, -r c, -r A_{k-1} c, ..., -r A_{k-1}^{k-2} c) applied to p_{k-1}.
    """
    if not m.is_square():
        raise ValueError("characteristic polynomial of a non-square matrix")
    if not m.is_integral:
        raise ValueError("charpoly_direct expects an integer matrix")
    a = m.to_object_array()
    n = a.shape[0]
    coeffs = [1]  # descending powers of t
    for k in range(1, n + 1):
        sub = a[: k - 1, : k - 1]
        c = a[: k - 1, k - 1]
        r = a[k - 1, : k - 1]
        col = [1, -a[k - 1, k - 1]]
        v = c
        for _ in range(k - 1):
            col.append(-int(r.dot(v)))
            v = sub.dot(v)
        coeffs = [sum(col[i - j] * coeffs[j] for j in range(max(0, i - k), min(i, k - 1) + 1)) for i in range(k + 1)]
    return IntPolynomial(reversed(coeffs))


def _solve_exact(rows: list[list[int]], rhs: list[int]) -> list[Fraction]:
    """Solve a consistent (possibly overdetermined) system by Gaussian elimination."""
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    pivot_cols = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(aug)) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        lead = aug[r][col]
        aug[r] = [x / lead for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivot_cols.append(col)
        r += 1
    if r < ncols:
        raise NonIntegerMultiplicity("multiplicity system is rank deficient")
    if any(aug[i][-1] != 0 for i in range(r, len(aug))):
        raise NonIntegerMultiplicity("trace data is inconsistent with a finite-order matrix")
    return [aug[i][-1] for i in range(ncols)]


def power_traces(m: ExactMatrix, k: int) -> list[int]:
    """[tr(M^0), ..., tr(M^{k-1})], after checking M^k = I."""
    if not m.is_square():
        raise ValueError("finite-order check needs a square matrix")
    traces = []
    p = ExactMatrix.identity(m.shape[0])
    for _ in range(k):
        traces.append(int(p.trace()))
        p = p @ m
    if not p.is_identity():
        raise NotFiniteOrder(f"M^{k} != I")
    return traces


def finite_order_multiplicities(m: ExactMatrix, order_bound: int) -> tuple[dict[int, int], list[int]]:
    """Multiplicity of each cyclotomic factor Phi_d (d | order_bound) and the traces used."""
    traces = power_traces(m, order_bound)
    divs = divisors(order_bound)
    system = [[ramanujan_sum(d, j) for d in divs] for j in range(order_bound)]
    sol = _solve_exact(system, traces)
    mult = {}
    for d, x in zip(divs, sol):
        if x.denominator != 1 or x < 0:
            raise NonIntegerMultiplicity(f"multiplicity of Phi_{d} came out as {x}")
        if x:
            mult[d] = int(x)
    return mult, traces


def charpoly_finite_order(m: ExactMatrix, order_bound: int) -> IntPolynomial:
    """det(tI - M) for M with M^order_bound = I, as prod Phi_d^{m_d}."""
    mult, _ = finite_order_multiplicities(m, order_bound)
    poly = IntPolynomial([1])
    for d, k in mult.items():
        poly = poly * cyclotomic(d) ** k
    return poly


def expand_factored(form: FactoredForm) -> IntPolynomial:
    """Expand a factored form; raises NotAPolynomial when a division is inexact."""
    return form.expand()


def theorem_form(n: int) -> FactoredForm:
    """(t^n - 1)^{2 c_{n-1}} / prod_{d | n} (t^d - 1)^{a_d}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return FactoredForm([(n, 2 * catalan(n - 1))] + [(d, -a_val(d)) for d in divisors(n)])


def conjecture_form(n: int) -> FactoredForm:
    """(t^{2n} - 1)^{c_{n-1}} / prod_{d | 2n} (t^d - 1)^{e_d}, e = b (n even) or b' (n odd)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    seq = b_val if n % 2 == 0 else bprime_val
    return FactoredForm([(2 * n, catalan(n - 1))] + [(d, -seq(d)) for d in divisors(2 * n)])


def substitute_square(f: FactoredForm) -> FactoredForm:
    """Char poly of M^2 from that of a finite-order M: t^d - 1 -> (t^{d/2} - 1)^2 for even d."""
    return FactoredForm((d, e) if d % 2 else (d // 2, 2 * e) for d, e in f.exponents.items())


def substitute_negate(f: FactoredForm) -> FactoredForm:
    """Char poly of -M from that of a finite-order M: t^d - 1 -> (t^{2d} - 1)/(t^d - 1) for odd d."""
    out = []
    for d, e in f.exponents.items():
        if d % 2:
            out += [(2 * d, e), (d, -e)]
        else:
            out.append((d, e))
    return FactoredForm(out)


def tau_form_from_conjecture(n: int) -> FactoredForm:
    """Push the conjectured char poly of theta through tau = (-1)^{n+1} theta^2."""
    sq = substitute_square(conjecture_form(n))
    return sq if n % 2 else substitute_negate(sq)


@dataclass
class SpectralReport:
    kind: str  # "theorem" or "conjecture"
    n: int
    dimension: int
    status: str
    polynomial: list[int]
    expected: list[int]
    factored: str
    cyclotomic: dict[int, int]
    methods: dict[str, list[int]] = field(default_factory=dict)
    timings_ms: dict[str, float] = field(default_factory=dict)
    matrix_order: int | None = None
    mismatch: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status in ("PASS", "CONJECTURE-PASS")

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n": self.n,
            "dimension": self.dimension,
            "status": self.status,
            "polynomial": self.polynomial,
            "expected": self.expected,
            "factored": self.factored,
            "cyclotomic": {str(d): m for d, m in self.cyclotomic.items()},
            "methods": self.methods,
            "timings_ms": self.timings_ms,
            "matrix_order": self.matrix_order,
            "mismatch": self.mismatch,
        }


def _first_mismatch(got: IntPolynomial, want: IntPolynomial) -> dict | None:
    for i in range(max(len(got), len(want))):
        if got[i] != want[i]:
            return {"index": i, "got": got[i], "expected": want[i]}
    return None


def _methods_for(dim: int, method: str, berkowitz_max: int) -> list[str]:
    if method == "both":
        return ["traces", "direct"] if dim <= berkowitz_max else ["traces"]
    return [method]


def _run(kind: str, n: int, matrix: ExactMatrix, order_bound: int, expected_form: FactoredForm,
         method: str, berkowitz_max: int) -> SpectralReport:
    expected = expected_form.expand()
    polys: dict[str, IntPolynomial] = {}
    timings: dict[str, float] = {}
    for name in _methods_for(matrix.shape[0], method, berkowitz_max):
        t0 = time.perf_counter()
        if name == "traces":
            polys[name] = charpoly_finite_order(matrix, order_bound)
        elif name == "direct":
            polys[name] = charpoly_direct(matrix)
        else:
            raise ValueError(f"unknown method {method!r}")
        timings[name] = round((time.perf_counter() - t0) * 1000, 3)

    got = next(iter(polys.values()))
    mismatch = None
    agree = all(p == got for p in polys.values())
    if not agree:
        names = list(polys)
        mismatch = {"methods_disagree": names, **(_first_mismatch(polys[names[0]], polys[names[-1]]) or {})}
    elif got != expected:
        mismatch = _first_mismatch(got, expected)
    ok = mismatch is None
    if kind == "conjecture":
        status = "CONJECTURE-PASS" if ok else ("CONJECTURE-FAIL" if agree else "FAIL")
    else:
        status = "PASS" if ok else "FAIL"
    return SpectralReport(
        kind=kind,
        n=n,
        dimension=matrix.shape[0],
        status=status,
        polynomial=list(got.coeffs),
        expected=list(expected.coeffs),
        factored=str(expected_form),
        cyclotomic=expected_form.cyclotomic_multiplicities(),
        methods={k: list(v.coeffs) for k, v in polys.items()},
        timings_ms=timings,
        mismatch=mismatch,
    )


def verify_theorem(n: int, method: str = "both", berkowitz_max: int = BERKOWITZ_MAX_DIM,
                   max_leaves: int = MAX_LEAVES) -> SpectralReport:
    """Char poly of tau on n leaves against the closed factored form."""
    tau = tau_matrix(n, max_leaves)
    return _run("theorem", n, tau, n, theorem_form(n), method, berkowitz_max)


def verify_conjecture(n: int, method: str = "both", berkowitz_max: int = BERKOWITZ_MAX_DIM,
                      max_leaves: int = MAX_LEAVES) -> SpectralReport:
    """Char poly of theta on n leaves against the conjectured factored form."""
    theta = theta_matrix(n, max_leaves)
    report = _run("conjecture", n, theta, 2 * n, conjecture_form(n), method, berkowitz_max)
    report.matrix_order = multiplicative_order(theta, 2 * n)
    return report


def matrix_to_lists(m: ExactMatrix) -> list[list[int]]:
    return [[int(x) for x in row] for row in m.tolist()]


def describe(report: SpectralReport) -> str:
    poly = IntPolynomial(report.polynomial)
    return f"{poly}  =  {format_cyclotomic(report.cyclotomic)}"


def eigen_angles(mult: dict[int, int]) -> list[tuple[float, int]]:
    """(angle / 2pi, multiplicity) for every eigenvalue implied by cyclotomic multiplicities."""
    out = []
    for d, m in mult.items():
        for k in range(d):
            if gcd(k, d) == 1:
                out.append((k / d, m))
    return sorted(out)

