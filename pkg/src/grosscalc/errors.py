"""Exception types shared across the package.

Everything arithmetic raises a subclass of ``GrossError``; the expression
evaluator attaches a source span (byte offsets) when it can tie a failure
to a location in the input text.  Ordinary precondition violations (a
negative count where a positive one is required, etc.) raise ``ValueError``
as usual.
"""

from __future__ import annotations


class GrossError(Exception):
    """Base class for arithmetic and domain errors."""

    span: tuple[int, int] | None = None


class NonIntegralPower(GrossError):
    """A power has no exact rational value."""


class NotDivisible(GrossError):
    """Division is only defined for exact monomial divisors."""


class NonPositiveBase(GrossError):
    """Exponential quantities require a strictly positive base."""


class BaseTooLarge(GrossError):
    """The base has a prime factor above the trial-division limit."""


class UnrepresentableOperation(GrossError):
    """The exact result falls outside the representable value families.

    Raised for things like negating an exponential quantity or multiplying
    a non-constant polynomial by an exponential one: the result exists in
    the wider numeral system but not in the two forms stored here.
    """


class MixedScaleAddition(UnrepresentableOperation):
    """Sum of quantities whose ratio is infinite or infinitesimal."""


class InvalidStart(GrossError):
    """A sequential process must start at position 1 or later."""


class NonPositiveCount(GrossError):
    """A collection size must be strictly positive."""


class SequenceCapExceeded(GrossError):
    """A sequential process cannot have more steps than the cap."""


class RangeViolation(GrossError):
    """Fractal arguments must satisfy the step-range constraint."""


class RangeViolationAtSubstitution(GrossError):
    """Finite substitution broke the step-range constraint."""


class FractalMismatch(GrossError):
    """Snapshots of different fractals cannot be compared."""


class ExprSyntaxError(GrossError):
    """Parse failure, carrying a byte offset and the expected-token set."""

    def __init__(self, message: str, offset: int, expected: tuple[str, ...] = ()):
        self.offset = offset
        self.expected = tuple(expected)
        detail = f"{message} at byte {offset}"
        if self.expected:
            detail += " (expected " + " or ".join(self.expected) + ")"
        super().__init__(detail)
