"""The unified value layer: polynomial or exponential, with one total order.

A ``GrossValue`` is either a ``GrossPolynomial`` or an ``ExpMeasure``.  The
normalization rule keeping the pair canonical: an exponential whose every
exponent is constant is really a plain rational and is converted to the
polynomial side, so a value sitting in the ExpMeasure variant always has a
genuine ① in some exponent.

Comparison across the two variants uses the scale rationals of the
exponential side: with R = Π p^(gross part), an exponential is larger than
every positive polynomial when R > 1 and smaller when R < 1 -- exponential
growth and decay beat polynomial growth and decay.  Inside one variant the
order is leading-term dominance (polynomials) or the exact ratio test
(exponentials).  Every decision is integer/rational arithmetic.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Union

from .errors import (
    MixedScaleAddition,
    NonPositiveBase,
    UnrepresentableOperation,
)
from .expmeasure import ExpMeasure, exp_make
from .grosspoly import GrossLinear, GrossPolynomial, RationalLike

GrossValue = Union[GrossPolynomial, ExpMeasure]

ZERO = GrossPolynomial()
ONE = GrossPolynomial.constant(1)
GROSSONE = GrossPolynomial.grossone()


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def from_sign(cls, sign: int) -> Ordering:
        return cls(0 if sign == 0 else (1 if sign > 0 else -1))

    @property
    def word(self) -> str:
        return self.name.lower()


def as_value(x: GrossValue | GrossLinear | RationalLike) -> GrossValue:
    """Normalize into the canonical GrossValue form."""
    if isinstance(x, ExpMeasure):
        if x.is_rational:
            return GrossPolynomial.constant(x.r_const())
        return x
    if isinstance(x, GrossPolynomial):
        return x
    if isinstance(x, GrossLinear):
        return x.as_poly()
    if isinstance(x, (int, Fraction)):
        return GrossPolynomial.constant(x)
    raise TypeError(f"cannot interpret {x!r} as a value")


def as_gross_linear(v: GrossValue | GrossLinear | int) -> GrossLinear:
    """Coerce to an integer affine form of ①, or fail."""
    if isinstance(v, GrossLinear):
        return v
    v = as_value(v)
    if isinstance(v, GrossPolynomial):
        lin = v.as_linear()
        if lin is not None:
            return lin
    raise UnrepresentableOperation(
        f"{format_value(v)} is not an integer affine form of ①"
    )


def value_compare(a: GrossValue, b: GrossValue) -> Ordering:
    """Total order over all values, decided exactly."""
    a = as_value(a)
    b = as_value(b)
    if isinstance(a, GrossPolynomial) and isinstance(b, GrossPolynomial):
        return Ordering.from_sign(a.compare(b))
    if isinstance(a, ExpMeasure) and isinstance(b, ExpMeasure):
        ratio = a / b
        r_inf = ratio.r_infinity()
        if r_inf != 1:
            return Ordering.GREATER if r_inf > 1 else Ordering.LESS
        r_const = ratio.r_const()
        if r_const != 1:
            return Ordering.GREATER if r_const > 1 else Ordering.LESS
        return Ordering.EQUAL
    if isinstance(a, ExpMeasure):
        return _compare_exp_poly(a, b)
    return Ordering(-_compare_exp_poly(b, a))


def _compare_exp_poly(e: ExpMeasure, q: GrossPolynomial) -> Ordering:
    # An exponential value is strictly positive, so it beats every
    # non-positive polynomial.  Against a positive polynomial the ①-scale
    # decides: exponentially infinite beats every polynomial, exponentially
    # infinitesimal loses to every positive one.  R = 1 cannot happen in a
    # normalized exponential.
    if q.sign() <= 0:
        return Ordering.GREATER
    return Ordering.GREATER if e.r_infinity() > 1 else Ordering.LESS


def value_add(a: GrossValue, b: GrossValue) -> GrossValue:
    a = as_value(a)
    b = as_value(b)
    if isinstance(a, GrossPolynomial) and isinstance(b, GrossPolynomial):
        return a + b
    if isinstance(a, ExpMeasure) and isinstance(b, ExpMeasure):
        ratio = a / b
        if not ratio.is_rational:
            raise MixedScaleAddition(
                f"{format_value(a)} and {format_value(b)} differ by an infinite "
                "or infinitesimal factor"
            )
        return as_value(b.multiply_rational(1 + ratio.r_const()))
    raise MixedScaleAddition(
        f"cannot add {format_value(a)} and {format_value(b)}: "
        "polynomial and exponential scales"
    )


def value_sub(a: GrossValue, b: GrossValue) -> GrossValue:
    a = as_value(a)
    b = as_value(b)
    if isinstance(a, GrossPolynomial) and isinstance(b, GrossPolynomial):
        return a - b
    if isinstance(a, ExpMeasure) and isinstance(b, ExpMeasure):
        ratio = a / b
        if not ratio.is_rational:
            raise MixedScaleAddition(
                f"{format_value(a)} and {format_value(b)} differ by an infinite "
                "or infinitesimal factor"
            )
        multiplier = ratio.r_const() - 1
        if multiplier == 0:
            return ZERO
        if multiplier < 0:
            raise UnrepresentableOperation(
                "negative exponential-scale values are not representable"
            )
        return as_value(b.multiply_rational(multiplier))
    raise MixedScaleAddition(
        f"cannot subtract {format_value(b)} from {format_value(a)}: "
        "polynomial and exponential scales"
    )


def value_neg(a: GrossValue) -> GrossValue:
    a = as_value(a)
    if isinstance(a, GrossPolynomial):
        return -a
    raise UnrepresentableOperation(
        "negative exponential-scale values are not representable"
    )


def value_mul(a: GrossValue, b: GrossValue) -> GrossValue:
    a = as_value(a)
    b = as_value(b)
    if isinstance(a, GrossPolynomial) and isinstance(b, GrossPolynomial):
        return a * b
    if isinstance(a, ExpMeasure) and isinstance(b, ExpMeasure):
        return as_value(a * b)
    if isinstance(a, GrossPolynomial):
        a, b = b, a
    # a is exponential, b polynomial: only rational multipliers fold in.
    assert isinstance(a, ExpMeasure) and isinstance(b, GrossPolynomial)
    if b.is_rational:
        q = b.as_rational()
        if q == 0:
            return ZERO
        if q > 0:
            return as_value(a.multiply_rational(q))
        raise UnrepresentableOperation(
            "negative exponential-scale values are not representable"
        )
    raise UnrepresentableOperation(
        f"product of polynomial {format_value(b)} and exponential "
        f"{format_value(a)} scales is not representable"
    )


def value_div(a: GrossValue, b: GrossValue) -> GrossValue:
    a = as_value(a)
    b = as_value(b)
    if isinstance(a, GrossPolynomial) and isinstance(b, GrossPolynomial):
        return a / b
    if isinstance(a, ExpMeasure) and isinstance(b, ExpMeasure):
        return as_value(a / b)
    if isinstance(b, ExpMeasure):
        # polynomial / exponential
        assert isinstance(a, GrossPolynomial)
        return value_mul(a, b**-1)
    # exponential / polynomial
    assert isinstance(a, ExpMeasure) and isinstance(b, GrossPolynomial)
    if b.is_rational:
        q = b.as_rational()
        if q == 0:
            raise ZeroDivisionError("division by zero")
        if q > 0:
            return as_value(a.multiply_rational(Fraction(1) / q))
        raise UnrepresentableOperation(
            "negative exponential-scale values are not representable"
        )
    raise UnrepresentableOperation(
        f"quotient of exponential {format_value(a)} by polynomial "
        f"{format_value(b)} scales is not representable"
    )


def value_pow(base: GrossValue, exponent: GrossValue | RationalLike) -> GrossValue:
    """Exact powering across the value families.

    Supported exponent shapes: integers (both families), non-integer
    rationals (monomials and exponentials when exactness permits), and
    integer affine forms of ① for positive rational bases, which is the
    gateway into the exponential family.
    """
    base = as_value(base)
    exponent = as_value(exponent)
    if isinstance(exponent, ExpMeasure):
        raise UnrepresentableOperation(
            "exponents of exponential scale are not representable"
        )
    if exponent.is_rational:
        q = exponent.as_rational()
        if isinstance(base, GrossPolynomial):
            return base**q
        if q.denominator == 1:
            return as_value(base ** q.numerator)
        return as_value(base.scale_exponents(q))
    lin = exponent.as_linear()
    if lin is None:
        raise UnrepresentableOperation(
            f"exponent {format_value(exponent)} is not an integer affine "
            "form of ①"
        )
    if isinstance(base, ExpMeasure):
        raise UnrepresentableOperation(
            "exponential base with infinite exponent leaves the representable "
            "families"
        )
    if base.is_rational:
        q = base.as_rational()
        if q <= 0:
            raise NonPositiveBase(
                f"base of an infinite power must be > 0, got {format_value(base)}"
            )
        return as_value(exp_make(q, lin))
    raise UnrepresentableOperation(
        f"base {format_value(base)} with infinite exponent is not representable"
    )


def value_eval_at(v: GrossValue, m: RationalLike) -> Fraction:
    """Exact finite substitution ① := m."""
    v = as_value(v)
    if isinstance(v, GrossPolynomial):
        return v.eval_at(m)
    if isinstance(m, Fraction):
        if m.denominator != 1:
            raise ValueError(
                f"exponential values need an integer substitution point, got {m}"
            )
        m = int(m)
    return v.eval_at(m)


def value_sign(v: GrossValue) -> int:
    v = as_value(v)
    if isinstance(v, GrossPolynomial):
        return v.sign()
    return 1  # exponentials are strictly positive


def format_value(v: GrossValue | GrossLinear) -> str:
    """Canonical text form; parsing it back yields a compare-equal value."""
    return str(as_value(v))


def format_rational(q: Fraction) -> str:
    return str(q)


def value_to_json(v: GrossValue | GrossLinear) -> dict:
    """JSON encoding: exponentials as prime-factor lists, polynomials as
    term lists with exact rational strings."""
    v = as_value(v)
    if isinstance(v, ExpMeasure):
        return v.to_json()
    return {
        "terms": [
            {"coeff": str(coeff), "exponent": str(exponent)}
            for coeff, exponent in v.terms
        ]
    }


def linear_to_json(lin: GrossLinear) -> dict:
    return {"gross": lin.gross_coeff, "const": lin.const_part}
