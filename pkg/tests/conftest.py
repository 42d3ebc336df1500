"""Shared random-value generators for the test suite.

Plain ``random.Random`` generators are used for the bulk sampled checks
(thousands of cases per law); hypothesis strategies built on top of them
drive the shrinkable property tests.
"""

from __future__ import annotations

import random
from fractions import Fraction

from grosscalc import ExpMeasure, GrossLinear, GrossPolynomial, as_value

PRIMES = (2, 3, 5, 7)


def random_rational(rng: random.Random, lo=-9, hi=9, max_den=3, nonzero=False) -> Fraction:
    while True:
        q = Fraction(rng.randint(lo, hi), rng.randint(1, max_den))
        if not nonzero or q != 0:
            return q


def random_linear(rng: random.Random, gross=(-3, 3), const=(-4, 4)) -> GrossLinear:
    return GrossLinear(rng.randint(*gross), rng.randint(*const))


def random_poly(rng: random.Random, max_terms=4, integer_exponents=False) -> GrossPolynomial:
    pairs = []
    for _ in range(rng.randint(0, max_terms)):
        if integer_exponents:
            exponent = Fraction(rng.randint(-3, 4))
        else:
            exponent = Fraction(rng.randint(-6, 8), rng.randint(1, 2))
        pairs.append((random_rational(rng, nonzero=True), exponent))
    return GrossPolynomial.from_terms(pairs)


def random_positive_poly(rng: random.Random, **kwargs) -> GrossPolynomial:
    while True:
        p = random_poly(rng, **kwargs)
        if p.sign() > 0:
            return p
        if p.sign() < 0:
            return -p


def random_exp(rng: random.Random, primes=PRIMES, gross=(-3, 3), const=(-4, 4)) -> ExpMeasure:
    """A genuinely exponential value: at least one ①-scaled exponent."""
    while True:
        factors = {}
        for p in primes:
            if rng.random() < 0.6:
                lin = random_linear(rng, gross, const)
                if not lin.is_zero:
                    factors[p] = lin
        e = ExpMeasure.from_map(factors)
        if not e.is_rational:
            return e


def random_value(rng: random.Random):
    if rng.random() < 0.5:
        return as_value(random_poly(rng))
    return as_value(random_exp(rng))
