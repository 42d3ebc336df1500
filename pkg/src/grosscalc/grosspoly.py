"""Exact arithmetic for gross-polynomials: finite sums of rational powers of
the infinite unit ①.

Two value shapes live here:

* ``GrossLinear`` -- integer affine forms ``a·① + b``.  These are the
  language of positions, step counts, and the exponents carried by
  exponential measures.
* ``GrossPolynomial`` -- finite sums ``Σ cᵢ·①^pᵢ`` with nonzero rational
  coefficients and strictly decreasing rational exponents.  The empty sum
  is 0; a plain rational is a single term with exponent 0.

Ordering follows leading-term dominance: ① exceeds every finite number, so
the sign of a nonzero polynomial is the sign of its highest-exponent
coefficient.  This yields a total order compatible with ``a + b > a`` for
every positive ``b``.  All arithmetic is exact on ``fractions.Fraction``;
nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import NonIntegralPower, NotDivisible

RationalLike = Union[int, Fraction]

GROSSONE_SYMBOL = "①"  # ①
GROSSONE_ASCII = "g1"


def _int_nth_root(n: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of n >= 0, plus whether the root is exact."""
    if n < 0:
        raise ValueError("root of negative integer")
    if n == 0:
        return 0, True
    if k == 1:
        return n, True
    # Newton iteration starting from a power-of-two upper bound.
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    return x, x**k == n


def rational_pow(base: RationalLike, exponent: Fraction) -> Fraction:
    """Exact base**exponent, or NonIntegralPower when no rational value exists.

    Integer exponents always succeed (0 to a negative power excepted);
    fractional exponents succeed only when the base is a perfect power,
    using the real-root convention for negative bases with odd roots.
    """
    base = Fraction(base)
    if exponent.denominator == 1:
        return base ** exponent.numerator
    k = exponent.denominator
    if base < 0 and k % 2 == 0:
        raise NonIntegralPower(f"even root of negative value {base}")
    num_root, num_exact = _int_nth_root(abs(base.numerator), k)
    den_root, den_exact = _int_nth_root(base.denominator, k)
    if not (num_exact and den_exact):
        raise NonIntegralPower(f"{base} has no exact rational {k}-th root")
    sign = -1 if base < 0 else 1
    return Fraction(sign * num_root, den_root) ** exponent.numerator


@dataclass(frozen=True, order=True)
class GrossLinear:
    """Integer affine form ``gross_coeff·① + const_part``.

    The generated dataclass ordering compares ``(gross_coeff, const_part)``
    lexicographically, which is exactly the order induced by ① being larger
    than every integer.
    """

    gross_coeff: int
    const_part: int

    @classmethod
    def constant(cls, b: int) -> GrossLinear:
        return cls(0, b)

    @property
    def is_zero(self) -> bool:
        return self.gross_coeff == 0 and self.const_part == 0

    @property
    def is_finite(self) -> bool:
        return self.gross_coeff == 0

    def __add__(self, other: GrossLinear | int) -> GrossLinear:
        if isinstance(other, int):
            other = GrossLinear(0, other)
        if not isinstance(other, GrossLinear):
            return NotImplemented
        return GrossLinear(
            self.gross_coeff + other.gross_coeff, self.const_part + other.const_part
        )

    __radd__ = __add__

    def __sub__(self, other: GrossLinear | int) -> GrossLinear:
        if isinstance(other, int):
            other = GrossLinear(0, other)
        if not isinstance(other, GrossLinear):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> GrossLinear:
        return GrossLinear(-self.gross_coeff, -self.const_part)

    def __mul__(self, k: int) -> GrossLinear:
        if not isinstance(k, int):
            return NotImplemented
        return GrossLinear(self.gross_coeff * k, self.const_part * k)

    __rmul__ = __mul__

    def scale(self, q: RationalLike) -> GrossLinear:
        """Multiply by a rational, requiring the result to stay integral."""
        q = Fraction(q)
        a = self.gross_coeff * q
        b = self.const_part * q
        if a.denominator != 1 or b.denominator != 1:
            raise NonIntegralPower(f"scaling {self} by {q} leaves integer form")
        return GrossLinear(int(a), int(b))

    def evaluate(self, m: int) -> int:
        """Value with ① replaced by the integer m."""
        return self.gross_coeff * m + self.const_part

    def as_poly(self) -> GrossPolynomial:
        return GrossPolynomial.from_terms(
            [(Fraction(self.gross_coeff), Fraction(1)), (Fraction(self.const_part), Fraction(0))]
        )

    def __str__(self) -> str:
        return str(self.as_poly())


GROSSONE_LINEAR = GrossLinear(1, 0)


def _canonical_terms(
    pairs: Iterable[tuple[RationalLike, RationalLike]],
) -> tuple[tuple[Fraction, Fraction], ...]:
    merged: dict[Fraction, Fraction] = {}
    for coeff, exponent in pairs:
        exponent = Fraction(exponent)
        merged[exponent] = merged.get(exponent, Fraction(0)) + Fraction(coeff)
    return tuple(
        (coeff, exponent)
        for exponent, coeff in sorted(merged.items(), key=lambda kv: kv[0], reverse=True)
        if coeff != 0
    )


@dataclass(frozen=True)
class GrossPolynomial:
    """Canonical term list ``((coeff, exponent), ...)``: nonzero rational
    coefficients, exponents strictly decreasing.  Empty tuple is 0."""

    terms: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def from_terms(cls, pairs: Iterable[tuple[RationalLike, RationalLike]]) -> GrossPolynomial:
        return cls(_canonical_terms(pairs))

    @classmethod
    def constant(cls, value: RationalLike) -> GrossPolynomial:
        return cls.from_terms([(Fraction(value), Fraction(0))])

    @classmethod
    def grossone(cls, power: RationalLike = 1, coeff: RationalLike = 1) -> GrossPolynomial:
        return cls.from_terms([(Fraction(coeff), Fraction(power))])

    @classmethod
    def from_linear(cls, lin: GrossLinear) -> GrossPolynomial:
        return lin.as_poly()

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_rational(self) -> bool:
        """True when the value contains no power of ① at all."""
        return not self.terms or (len(self.terms) == 1 and self.terms[0][1] == 0)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def as_rational(self) -> Fraction:
        if not self.terms:
            return Fraction(0)
        if self.is_rational:
            return self.terms[0][0]
        raise ValueError(f"{self} is not a plain rational")

    def as_linear(self) -> GrossLinear | None:
        """The value as an integer affine form of ①, or None if it is not one."""
        gross = Fraction(0)
        const = Fraction(0)
        for coeff, exponent in self.terms:
            if exponent == 1:
                gross = coeff
            elif exponent == 0:
                const = coeff
            else:
                return None
        if gross.denominator != 1 or const.denominator != 1:
            return None
        return GrossLinear(int(gross), int(const))

    def sign(self) -> int:
        """Sign of the value: the sign of the leading coefficient."""
        if not self.terms:
            return 0
        lead = self.terms[0][0]
        return 1 if lead > 0 else -1

    def compare(self, other: GrossPolynomial) -> int:
        """-1, 0, or 1 as self is less than, equal to, or greater than other."""
        return (self - other).sign()

    def __add__(self, other: GrossPolynomial | RationalLike) -> GrossPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GrossPolynomial.from_terms(list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __sub__(self, other: GrossPolynomial | RationalLike) -> GrossPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RationalLike) -> GrossPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self) -> GrossPolynomial:
        return GrossPolynomial(tuple((-c, e) for c, e in self.terms))

    def __mul__(self, other: GrossPolynomial | RationalLike) -> GrossPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        products = [
            (ca * cb, ea + eb) for ca, ea in self.terms for cb, eb in other.terms
        ]
        return GrossPolynomial.from_terms(products)

    __rmul__ = __mul__

    def __truediv__(self, other: GrossPolynomial | RationalLike) -> GrossPolynomial:
        other = _coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if not other.is_monomial:
            raise NotDivisible(f"divisor {other} is not a monomial")
        dc, de = other.terms[0]
        return GrossPolynomial(tuple((c / dc, e - de) for c, e in self.terms))

    def __rtruediv__(self, other: RationalLike) -> GrossPolynomial:
        lifted = _coerce(other)
        if lifted is None:
            return NotImplemented
        return lifted / self

    def __pow__(self, exponent: RationalLike) -> GrossPolynomial:
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            k = exponent.numerator
            if k >= 0:
                result = GrossPolynomial.constant(1)
                base = self
                while k:
                    if k & 1:
                        result = result * base
                    base = base * base
                    k >>= 1
                return result
            return GrossPolynomial.constant(1) / self ** (-k)
        # Fractional powers are exact only for monomials with perfect-power
        # coefficients.
        if self.is_zero:
            if exponent > 0:
                return self
            raise ZeroDivisionError("zero to a negative power")
        if not self.is_monomial:
            raise NonIntegralPower(
                f"non-integer power {exponent} of multi-term value {self}"
            )
        coeff, exp = self.terms[0]
        return GrossPolynomial.from_terms(
            [(rational_pow(coeff, exponent), exp * exponent)]
        )

    def eval_at(self, m: RationalLike) -> Fraction:
        """Exact value with ① replaced by the rational m."""
        m = Fraction(m)
        total = Fraction(0)
        for coeff, exponent in self.terms:
            total += coeff * rational_pow(m, exponent)
        return total

    def __lt__(self, other: GrossPolynomial) -> bool:
        if not isinstance(other, GrossPolynomial):
            return NotImplemented
        return self.compare(other) < 0

    def __le__(self, other: GrossPolynomial) -> bool:
        if not isinstance(other, GrossPolynomial):
            return NotImplemented
        return self.compare(other) <= 0

    def __gt__(self, other: GrossPolynomial) -> bool:
        if not isinstance(other, GrossPolynomial):
            return NotImplemented
        return self.compare(other) > 0

    def __ge__(self, other: GrossPolynomial) -> bool:
        if not isinstance(other, GrossPolynomial):
            return NotImplemented
        return self.compare(other) >= 0

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(value: GrossPolynomial | RationalLike) -> GrossPolynomial | None:
    if isinstance(value, GrossPolynomial):
        return value
    if isinstance(value, (int, Fraction)):
        return GrossPolynomial.constant(value)
    return None


def _format_exponent(e: Fraction) -> str:
    if e.denominator == 1 and e >= 0:
        return str(e)
    return f"({e})"


def _format_term(coeff: Fraction, exponent: Fraction) -> str:
    """Render a single term with a positive coefficient."""
    if exponent == 0:
        return str(coeff)
    if exponent == 1:
        base = GROSSONE_SYMBOL
    else:
        base = f"{GROSSONE_SYMBOL}^{_format_exponent(exponent)}"
    if coeff == 1:
        return base
    return f"{coeff}*{base}"


def format_poly(p: GrossPolynomial) -> str:
    """Canonical text form: terms joined by +/-, e.g. ``①^3+2*①-2``."""
    if not p.terms:
        return "0"
    parts = []
    for i, (coeff, exponent) in enumerate(p.terms):
        negative = coeff < 0
        body = _format_term(-coeff if negative else coeff, exponent)
        if i == 0:
            parts.append("-" + body if negative else body)
        else:
            parts.append(("-" if negative else "+") + body)
    return "".join(parts)
