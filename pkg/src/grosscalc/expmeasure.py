"""Exponentially scaled exact quantities Π p^(aₚ·① + bₚ) over primes p.

An ``ExpMeasure`` stores a positive value of exponential scale -- box
counts like 8^(①-1), side lengths like 3^(-(①-1)), areas like
(8/9)^(①-1) -- as a sorted tuple of (prime, GrossLinear) pairs with no
zero exponents.  The empty tuple is 1.

The prime-factored form is what makes equality and ordering decidable by
integer arithmetic alone: (8/9)^e and 2^(3e)·3^(-2e) normalize to the same
tuple, and comparing two measures reduces to comparing the exact rationals
Π p^(Δaₚ) and Π p^(Δbₚ) against 1 -- no logarithms, no floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import BaseTooLarge, NonPositiveBase
from .grosspoly import GROSSONE_SYMBOL, GrossLinear, RationalLike

# Bases needing prime factors above this are rejected; everything in scope
# factors over single-digit primes.
TRIAL_DIVISION_LIMIT = 10**6


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 by trial division.

    Raises BaseTooLarge when a prime factor above TRIAL_DIVISION_LIMIT
    would be required.
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    factors: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n and d <= TRIAL_DIVISION_LIMIT:
        for p in (d, d + 2):
            while n % p == 0:
                factors[p] = factors.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        if n > TRIAL_DIVISION_LIMIT:
            raise BaseTooLarge(
                f"prime factor of {n} exceeds trial-division limit {TRIAL_DIVISION_LIMIT}"
            )
        factors[n] = factors.get(n, 0) + 1
    return factors


@dataclass(frozen=True)
class ExpMeasure:
    """Sorted (prime, exponent) pairs; exponents are nonzero GrossLinear."""

    factors: tuple[tuple[int, GrossLinear], ...] = ()

    @classmethod
    def from_map(cls, mapping: Mapping[int, GrossLinear]) -> ExpMeasure:
        return cls(
            tuple(
                (p, lin)
                for p, lin in sorted(mapping.items())
                if not lin.is_zero
            )
        )

    @classmethod
    def one(cls) -> ExpMeasure:
        return cls()

    @classmethod
    def from_rational(cls, value: RationalLike) -> ExpMeasure:
        """A plain positive rational as const-exponent prime factors."""
        return exp_make(value, GrossLinear(0, 1))

    @property
    def is_one(self) -> bool:
        return not self.factors

    @property
    def is_rational(self) -> bool:
        """True when every exponent is constant (no ① part anywhere)."""
        return all(lin.gross_coeff == 0 for _, lin in self.factors)

    def exponent_of(self, prime: int) -> GrossLinear:
        for p, lin in self.factors:
            if p == prime:
                return lin
        return GrossLinear(0, 0)

    def __mul__(self, other: ExpMeasure) -> ExpMeasure:
        if not isinstance(other, ExpMeasure):
            return NotImplemented
        merged = {p: lin for p, lin in self.factors}
        for p, lin in other.factors:
            merged[p] = merged.get(p, GrossLinear(0, 0)) + lin
        return ExpMeasure.from_map(merged)

    def __truediv__(self, other: ExpMeasure) -> ExpMeasure:
        if not isinstance(other, ExpMeasure):
            return NotImplemented
        return self * other**-1

    def __pow__(self, k: int) -> ExpMeasure:
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return ExpMeasure.one()
        return ExpMeasure.from_map({p: lin * k for p, lin in self.factors})

    def scale_exponents(self, q: RationalLike) -> ExpMeasure:
        """Raise to a rational power, requiring integral scaled exponents."""
        q = Fraction(q)
        if q == 0:
            return ExpMeasure.one()
        return ExpMeasure.from_map({p: lin.scale(q) for p, lin in self.factors})

    def multiply_rational(self, q: RationalLike) -> ExpMeasure:
        """Fold a positive rational multiplier into the prime factors."""
        return self * ExpMeasure.from_rational(q)

    def r_infinity(self) -> Fraction:
        """Π p^(gross part): the exact rational deciding the ①-scale."""
        value = Fraction(1)
        for p, lin in self.factors:
            value *= Fraction(p) ** lin.gross_coeff
        return value

    def r_const(self) -> Fraction:
        """Π p^(const part): the finite residue once ①-scales cancel."""
        value = Fraction(1)
        for p, lin in self.factors:
            value *= Fraction(p) ** lin.const_part
        return value

    def rational_value(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is not a plain rational")
        return self.r_const()

    def eval_at(self, m: int) -> Fraction:
        """Exact rational Π p^(gₚ(m)); substitution is always exact."""
        if not isinstance(m, int):
            raise ValueError(f"substitution point must be an integer, got {m!r}")
        if m < 1:
            raise ValueError(f"substitution point must be >= 1, got {m}")
        value = Fraction(1)
        for p, lin in self.factors:
            value *= Fraction(p) ** lin.evaluate(m)
        return value

    def _fold(self) -> tuple[Fraction, GrossLinear, Fraction]:
        """Decompose as base^exponent · residue with base = Π p^(gross part).

        When every gross prime shares one integer shift s (bₚ = aₚ·s) and
        nothing else remains, the exponent is ①+s and the residue is 1;
        otherwise the exponent is ① and the residue collects all constant
        parts.
        """
        base = self.r_infinity()
        shifts = {
            Fraction(lin.const_part, lin.gross_coeff)
            for _, lin in self.factors
            if lin.gross_coeff != 0
        }
        const_only = [
            (p, lin) for p, lin in self.factors if lin.gross_coeff == 0
        ]
        if len(shifts) == 1 and not const_only:
            (shift,) = shifts
            if shift.denominator == 1:
                return base, GrossLinear(1, int(shift)), Fraction(1)
        residue = self.r_const()
        return base, GrossLinear(1, 0), residue

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.r_const())
        base, lin, residue = self._fold()
        base_text = f"({base})" if base.denominator != 1 else str(base)
        if lin.const_part == 0:
            exp_text = GROSSONE_SYMBOL
        elif lin.const_part > 0:
            exp_text = f"({GROSSONE_SYMBOL}+{lin.const_part})"
        else:
            exp_text = f"({GROSSONE_SYMBOL}-{-lin.const_part})"
        text = f"{base_text}^{exp_text}"
        if residue != 1:
            residue_text = f"({residue})" if residue.denominator != 1 else str(residue)
            text += f"*{residue_text}"
        return text

    def to_json(self) -> dict:
        return {
            "factors": [
                {"prime": p, "gross": lin.gross_coeff, "const": lin.const_part}
                for p, lin in self.factors
            ]
        }


def exp_make(base: RationalLike, exponent: GrossLinear) -> ExpMeasure:
    """base^exponent in prime-factored canonical form.

    The base is factored into primes and each prime's multiplicity is
    scaled by the exponent; denominators contribute negated exponents.
    """
    base = Fraction(base)
    if base <= 0:
        raise NonPositiveBase(f"base must be > 0, got {base}")
    factors: dict[int, GrossLinear] = {}
    for p, mult in factorize(base.numerator).items():
        factors[p] = factors.get(p, GrossLinear(0, 0)) + exponent * mult
    for p, mult in factorize(base.denominator).items():
        factors[p] = factors.get(p, GrossLinear(0, 0)) - exponent * mult
    return ExpMeasure.from_map(factors)
