"""Integer polynomials and products of the form prod_d (t^d - 1)^{e_d}."""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from functools import lru_cache

from .arith import divisors, mobius

__all__ = [
    "NotAPolynomial",
    "IntPolynomial",
    "FactoredForm",
    "cyclotomic",
    "cyclotomic_multiplicities",
    "format_cyclotomic",
]


class NotAPolynomial(ArithmeticError):
    """A factored form whose denominator does not divide its numerator."""


class IntPolynomial:
    """Polynomial with integer coefficients, stored in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls([0] * degree + [coeff])

    @classmethod
    def t_power_minus_one(cls, d: int) -> IntPolynomial:
        return cls([-1] + [0] * (d - 1) + [1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        n = max(len(self), len(other))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self) + len(other) - 1)
        # skip zero coefficients: the products here are mostly sparse
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in right:
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod_monic(self, divisor: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Long division by a monic divisor; exact over the integers."""
        if divisor.is_zero() or divisor.coeffs[-1] != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dd = divisor.degree
        if len(rem) <= dd:
            return IntPolynomial(), IntPolynomial(rem)
        quot = [0] * (len(rem) - dd)
        low = [(j, b) for j, b in enumerate(divisor.coeffs[:-1]) if b]
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i]
            if q:
                quot[i - dd] = q
                for j, b in low:
                    rem[i - dd + j] -= q * b
                rem[i] = 0
        return IntPolynomial(quot), IntPolynomial(rem[:dd])

    def mul_t_power_minus_one(self, d: int) -> IntPolynomial:
        """Multiply by t^d - 1 in linear time."""
        c = self.coeffs
        out = [0] * (len(c) + d)
        for i, a in enumerate(c):
            out[i + d] += a
            out[i] -= a
        return IntPolynomial(out)

    def div_t_power_minus_one(self, d: int) -> IntPolynomial:
        """Exact division by t^d - 1; raises NotAPolynomial on a remainder."""
        c = self.coeffs
        if not c:
            return IntPolynomial()
        if len(c) <= d:
            raise NotAPolynomial(f"t^{d} - 1 does not divide a degree {len(c) - 1} polynomial")
        # self = q * (t^d - 1)  =>  q[i] = c[i + d] + q[i + d], from the top
        q = [0] * (len(c) - d)
        for i in range(len(q) - 1, -1, -1):
            q[i] = c[i + d] + (q[i + d] if i + d < len(q) else 0)
        # low coefficients must agree: c[i] == -q[i] for i < d
        for i in range(d):
            if c[i] != -(q[i] if i < len(q) else 0):
                raise NotAPolynomial(f"t^{d} - 1 leaves a remainder")
        return IntPolynomial(q)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> IntPolynomial:
    """Phi_d(t) = prod_{e | d} (t^e - 1)^{mu(d/e)}."""
    num = IntPolynomial([1])
    den = []
    for e in divisors(d):
        m = mobius(d // e)
        if m == 1:
            num = num.mul_t_power_minus_one(e)
        elif m == -1:
            den.append(e)
    for e in den:
        num = num.div_t_power_minus_one(e)
    return num


class FactoredForm:
    """Formal product prod_d (t^d - 1)^{e_d} with integer exponents.

    Zero exponents are dropped, so two forms compare equal exactly when their
    exponent maps agree.
    """

    __slots__ = ("exponents",)

    def __init__(self, exponents: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = exponents.items() if isinstance(exponents, Mapping) else exponents
        acc: dict[int, int] = {}
        for d, e in items:
            if d < 1:
                raise ValueError(f"factor index must be positive, got {d}")
            acc[d] = acc.get(d, 0) + int(e)
        self.exponents: dict[int, int] = {d: acc[d] for d in sorted(acc) if acc[d]}

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FactoredForm):
            return self.exponents == other.exponents
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.exponents.items()))

    def __mul__(self, other: FactoredForm) -> FactoredForm:
        return FactoredForm(list(self.exponents.items()) + list(other.exponents.items()))

    def inverse(self) -> FactoredForm:
        return FactoredForm({d: -e for d, e in self.exponents.items()})

    @property
    def degree(self) -> int:
        return sum(d * e for d, e in self.exponents.items())

    def expand(self) -> IntPolynomial:
        """Multiply out the numerator, then divide out the denominator exactly."""
        poly = IntPolynomial([1])
        for d, e in self.exponents.items():
            for _ in range(max(e, 0)):
                poly = poly.mul_t_power_minus_one(d)
        for d, e in self.exponents.items():
            for _ in range(max(-e, 0)):
                poly = poly.div_t_power_minus_one(d)
        return poly

    def cyclotomic_multiplicities(self) -> dict[int, int]:
        """Exponent of each Phi_k, using t^d - 1 = prod_{k | d} Phi_k."""
        mult: dict[int, int] = {}
        for d, e in self.exponents.items():
            for k in divisors(d):
                mult[k] = mult.get(k, 0) + e
        return {k: mult[k] for k in sorted(mult) if mult[k]}

    @classmethod
    def from_cyclotomic(cls, mult: Mapping[int, int]) -> FactoredForm:
        """Inverse of :meth:`cyclotomic_multiplicities` (Mobius inversion over divisors)."""
        exps: dict[int, int] = {}
        for k, m in mult.items():
            for d in divisors(k):
                exps[d] = exps.get(d, 0) + mobius(k // d) * m
        return cls(exps)

    def __repr__(self) -> str:
        return f"FactoredForm({self.exponents})"

    def __str__(self) -> str:
        if not self.exponents:
            return "1"
        def factor(d: int, e: int) -> str:
            base = "(t-1)" if d == 1 else f"(t^{d}-1)"
            return base if e == 1 else f"{base}^{e}"

        num = [factor(d, e) for d, e in self.exponents.items() if e > 0]
        den = [factor(d, -e) for d, e in self.exponents.items() if e < 0]
        out = "*".join(num) or "1"
        if den:
            out += " / (" + "*".join(den) + ")"
        return out


def cyclotomic_multiplicities(poly: IntPolynomial, max_order: int) -> dict[int, int] | None:
    """Write ``poly`` as prod Phi_d^{m_d} with d <= max_order, or None if it is not one."""
    rest = poly
    mult: dict[int, int] = {}
    for d in range(1, max_order + 1):
        phi = cyclotomic(d)
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            mult[d] = mult.get(d, 0) + 1
    if rest != IntPolynomial([1]):
        return None
    return mult


def format_cyclotomic(mult: Mapping[int, int]) -> str:
    if not mult:
        return "1"
    return " * ".join(f"Phi_{d}" + (f"^{m}" if m != 1 else "") for d, m in sorted(mult.items()))
