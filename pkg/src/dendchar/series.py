"""Truncated univariate power series over the rationals.

``RationalSeries(coeffs, order)`` knows the coefficients of x^0 .. x^{order-1}
exactly; everything past that is unknown, and no operation reads it.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from fractions import Fraction
from math import comb

from .arith import a_val, b_val, catalan, lambda_val

__all__ = [
    "BadConstantTerm",
    "OrderMismatch",
    "RationalSeries",
    "series_add",
    "series_mul",
    "series_div",
    "series_sqrt",
    "series_log",
    "series_exp",
    "product_form",
    "fa_closed",
    "fb_closed",
    "TAYLOR_IDENTITIES",
    "taylor_sides",
    "taylor_check",
    "fa_fb_relation_sides",
    "crux_exponents",
    "verify_fa_fb_relation",
    "DEFAULT_ORDER",
    "catalan_series",
]

DEFAULT_ORDER = 30


class BadConstantTerm(ValueError):
    """Operation needs a particular constant term (nonzero, or exactly 1)."""


class OrderMismatch(ValueError):
    """Binary operation on series of different truncation orders."""


class RationalSeries:
    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        c = [Fraction(x) for x in coeffs]
        if order is None:
            order = len(c)
        if order < 0:
            raise ValueError("order must be >= 0")
        c = c[:order] + [Fraction(0)] * (order - len(c))
        self.coeffs: list[Fraction] = c
        self.order = order

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> RationalSeries:
        return cls([fn(k) for k in range(order)], order)

    @classmethod
    def x(cls, order: int) -> RationalSeries:
        return cls([0, 1], order)

    @classmethod
    def one(cls, order: int) -> RationalSeries:
        return cls([1], order)

    def _check(self, other: RationalSeries) -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k < self.order:
            raise IndexError(f"coefficient {k} is outside the known range 0..{self.order - 1}")
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, RationalSeries):
            other = RationalSeries([other], self.order)
        self._check(other)
        return RationalSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self) -> RationalSeries:
        return RationalSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RationalSeries):
            c = Fraction(other)
            return RationalSeries([a * c for a in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * n
        for i in range(n):
            if a[i]:
                ai = a[i]
                for j in range(n - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return RationalSeries(out, n)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, RationalSeries):
            return self * (Fraction(1) / Fraction(other))
        return series_div(self, other)

    def __rtruediv__(self, other):
        return series_div(RationalSeries([other], self.order), self)

    def __pow__(self, k: int) -> RationalSeries:
        if k < 0:
            return series_div(RationalSeries.one(self.order), self**-k)
        result = RationalSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def derivative(self) -> RationalSeries:
        """f', known to one fewer term."""
        return RationalSeries([k * self.coeffs[k] for k in range(1, self.order)], max(self.order - 1, 0))

    def integral(self) -> RationalSeries:
        """Antiderivative with zero constant term, known to one more term."""
        return RationalSeries([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)], self.order + 1)

    def shift_down(self) -> RationalSeries:
        """f / x for f with f(0) = 0."""
        if self.order and self.coeffs[0] != 0:
            raise BadConstantTerm("dividing by x needs a zero constant term")
        return RationalSeries(self.coeffs[1:], max(self.order - 1, 0))

    def truncate(self, order: int) -> RationalSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} to {order}")
        return RationalSeries(self.coeffs[:order], order)

    def compose_monomial(self, c, k: int) -> RationalSeries:
        """f(c * x^k), keeping the same order."""
        c = Fraction(c)
        out = [Fraction(0)] * self.order
        for i, a in enumerate(self.coeffs):
            if i * k >= self.order:
                break
            out[i * k] = a * c**i
        return RationalSeries(out, self.order)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"RationalSeries([{shown}{more}], order={self.order})"


def series_add(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    return f + g


def series_mul(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    return f * g


def series_div(f: RationalSeries, g: RationalSeries) -> RationalSeries:
    f._check(g)
    n = f.order
    if n and g.coeffs[0] == 0:
        raise BadConstantTerm("division by a series with zero constant term")
    q = [Fraction(0)] * n
    inv0 = 1 / g.coeffs[0] if n else Fraction(1)
    for k in range(n):
        acc = f.coeffs[k] - sum(q[j] * g.coeffs[k - j] for j in range(k) if g.coeffs[k - j])
        q[k] = acc * inv0
    return RationalSeries(q, n)


def series_sqrt(f: RationalSeries) -> RationalSeries:
    """Square root with constant term 1, from s^2 = f solved term by term."""
    n = f.order
    if n and f.coeffs[0] != 1:
        raise BadConstantTerm("sqrt needs constant term 1")
    s = [Fraction(0)] * n
    if n:
        s[0] = Fraction(1)
    for k in range(1, n):
        cross = sum(s[j] * s[k - j] for j in range(1, k))
        s[k] = (f.coeffs[k] - cross) / 2
    return RationalSeries(s, n)


def series_log(f: RationalSeries) -> RationalSeries:
    """log f for f(0) = 1, as the integral of f'/f."""
    n = f.order
    if n and f.coeffs[0] != 1:
        raise BadConstantTerm("log needs constant term 1")
    if n == 0:
        return RationalSeries([], 0)
    ratio = series_div(f.derivative(), f.truncate(n - 1))
    return ratio.integral()


def series_exp(f: RationalSeries) -> RationalSeries:
    """exp f for f(0) = 0, from g' = f' g."""
    n = f.order
    if n and f.coeffs[0] != 0:
        raise BadConstantTerm("exp needs constant term 0")
    g = [Fraction(0)] * n
    if n:
        g[0] = Fraction(1)
    df = [k * f.coeffs[k] for k in range(n)]
    for k in range(1, n):
        g[k] = sum(df[j] * g[k - j] for j in range(1, k + 1)) / k
    return RationalSeries(g, n)


def product_form(exponents: Mapping[int, int] | Callable[[int], int], n: int) -> RationalSeries:
    """prod_{d <= n} (1 - x^d)^{-e_d} through degree n.

    Uses log prod = sum_d e_d sum_k x^{dk}/k, then exp.
    """
    get = exponents if callable(exponents) else (lambda d: exponents.get(d, 0))
    order = n + 1
    logc = [Fraction(0)] * order
    for d in range(1, n + 1):
        e = get(d)
        if e:
            for k in range(1, n // d + 1):
                logc[d * k] += Fraction(e, k)
    return series_exp(RationalSeries(logc, order))


def fa_closed(n: int) -> RationalSeries:
    """(1 - sqrt(1 - 4x)) / (2x) through degree n."""
    order = n + 2
    x = RationalSeries.x(order)
    return ((1 - series_sqrt(1 - 4 * x)) / 2).shift_down()


def fb_closed(n: int) -> RationalSeries:
    """(-1 + 2x + sqrt(1 + 4x^2)) / (2x) through degree n."""
    order = n + 2
    x = RationalSeries.x(order)
    return ((-1 + 2 * x + series_sqrt(1 + 4 * x * x)) / 2).shift_down()


# --- Taylor expansions ------------------------------------------------------


def _a1(order):
    x = RationalSeries.x(order)
    left = RationalSeries.from_function(lambda k: comb(2 * k, k), order)
    right = series_div(RationalSeries.one(order), series_sqrt(1 - 4 * x))
    return left, right


def _a2(order):
    x = RationalSeries.x(order)
    left = RationalSeries.from_function(lambda k: Fraction(comb(2 * k - 2, k - 1), k) if k else 0, order)
    right = (1 - series_sqrt(1 - 4 * x)) / 2
    return left, right


def _a3(order):
    x = RationalSeries.x(order)
    left = RationalSeries.from_function(lambda k: Fraction(comb(2 * k, k), 2 * k) if k else 0, order)
    right = -series_log((1 + series_sqrt(1 - 4 * x)) / 2)
    return left, right


def _a4(order):
    # odd powers only: coefficient of x^{2k+1} is (-1)^{k+1} binom(2k, k) / (k + 1)
    def coeff(m):
        if m % 2 == 0:
            return 0
        k = (m - 1) // 2
        return Fraction((-1) ** (k + 1) * comb(2 * k, k), k + 1)

    left = RationalSeries.from_function(coeff, order)
    x = RationalSeries.x(order + 1)
    right = ((1 - series_sqrt(1 + 4 * x * x)) / 2).shift_down()
    return left, right


def _lambda_closed_coeff(m: int) -> int:
    """lambda(m) read off the even/odd split, independent of :func:`lambda_val`.

    x / sqrt(1 + 4x^2) contributes (-1)^k binom(2k, k) at x^{2k+1};
    -(1 - 1/sqrt(1 + 4x^2)) / 2 contributes (-1)^k binom(2k, k) / 2 at x^{2k}, k >= 1,
    which is (-1)^k binom(2k - 1, k).
    """
    if m % 2:
        k = (m - 1) // 2
        return (-1) ** k * comb(2 * k, k)
    k = m // 2
    return (-1) ** k * comb(2 * k - 1, k)


def _a5(order):
    left = RationalSeries.from_function(lambda m: _lambda_closed_coeff(m) if m else 0, order)
    x = RationalSeries.x(order)
    inv = series_div(RationalSeries.one(order), series_sqrt(1 + 4 * x * x))
    right = x * inv - (1 - inv) / 2
    return left, right


def _a6(order):
    x = RationalSeries.x(order)
    left = RationalSeries.from_function(lambda m: Fraction(lambda_val(m), m) if m else 0, order)
    right = -series_log((1 - 2 * x + series_sqrt(1 + 4 * x * x)) / 2)
    return left, right


TAYLOR_IDENTITIES: dict[str, Callable[[int], tuple[RationalSeries, RationalSeries]]] = {
    "A1": _a1,
    "A2": _a2,
    "A3": _a3,
    "A4": _a4,
    "A5": _a5,
    "A6": _a6,
}


def taylor_sides(identity_id: str, n: int) -> tuple[RationalSeries, RationalSeries]:
    """(closed sum, composed right-hand side), both through degree n."""
    try:
        build = TAYLOR_IDENTITIES[identity_id.upper()]
    except KeyError:
        raise ValueError(f"unknown identity {identity_id!r}; expected one of {sorted(TAYLOR_IDENTITIES)}") from None
    return build(n + 1)


def taylor_check(identity_id: str, n: int = DEFAULT_ORDER) -> bool:
    left, right = taylor_sides(identity_id, n)
    if identity_id.upper() == "A5":
        # the even/odd closed form must also agree with the direct definition of lambda
        if any(left[m] != lambda_val(m) for m in range(1, n + 1)):
            return False
    return left == right


def crux_exponents(n: int) -> dict[int, int]:
    """Exponents e_m (for prod (1 - x^m)^{-e_m}) of the three-factor product built from b."""
    b = b_val
    out = {}
    for m in range(1, n + 1):
        if m % 4 == 0:
            out[m] = 2 * b(2 * m)
        elif m % 2 == 0:
            out[m] = 2 * b(2 * m) + 2 * b(m) + b(m // 2)
        else:
            out[m] = -2 * b(2 * m) - b(m)
    return out


def fa_fb_relation_sides(n: int) -> tuple[RationalSeries, RationalSeries]:
    """F_a(-z^2) and F_b(z) F_b(-z), both through degree n in z."""
    order = n + 1
    fa = product_form(a_val, max(n // 2, 1))
    # F_a(-z^2): coefficient of z^{2k} is (-1)^k [x^k] F_a
    lhs = [Fraction(0)] * order
    for k in range(n // 2 + 1):
        lhs[2 * k] = (-1) ** k * fa.coeffs[k]
    fb = product_form(b_val, n)
    rhs = fb * fb.compose_monomial(-1, 1)
    return RationalSeries(lhs, order), rhs


def verify_fa_fb_relation(n: int = DEFAULT_ORDER) -> bool:
    """F_a(-z^2) = F_b(z) F_b(-z), and F_a equals the product with crux exponents, through degree n."""
    lhs, rhs = fa_fb_relation_sides(n)
    if lhs != rhs:
        return False
    return product_form(a_val, n) == product_form(crux_exponents(n), n)


def catalan_series(n: int) -> RationalSeries:
    return RationalSeries.from_function(catalan, n + 1)
