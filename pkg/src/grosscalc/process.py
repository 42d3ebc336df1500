"""Sequential processes under the ①-step cap.

Any sequential process has at most ① steps, so a process starting at
position s ends, at the farthest, at s + ① - 1; and a collection can be
counted one by one only when its size does not exceed ①.  The element
counts of the natural numbers with elements removed, added, or combined
into tuples live here as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidStart, NonPositiveCount, SequenceCapExceeded
from .grosspoly import GrossLinear, GrossPolynomial
from .values import GROSSONE, GrossValue, Ordering, as_value, value_compare, value_sign


def max_sequence_length() -> GrossValue:
    """The exact cap on the number of steps of any sequential process: ①."""
    return GROSSONE


def sequential_reach(start: GrossLinear) -> GrossLinear:
    """Farthest element reachable in ① sequential steps from ``start``."""
    if start < GrossLinear(0, 1):
        raise InvalidStart(f"start must be >= 1, got {start}")
    return start + GrossLinear(1, -1)


def is_sequentially_countable(count: GrossValue) -> bool:
    """Whether a collection of the given positive size can be counted one
    by one: true exactly when the size does not exceed ①."""
    count = as_value(count)
    if value_sign(count) <= 0:
        raise NonPositiveCount(f"count must be positive, got {count}")
    return value_compare(count, GROSSONE) is not Ordering.GREATER


def naturals_size() -> GrossValue:
    """Number of elements of the natural numbers: ①."""
    return GROSSONE


def naturals_size_removing(j: int) -> GrossValue:
    """Number of elements after removing j distinct elements: ① - j."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return GrossLinear(1, -j).as_poly()


def naturals_size_adding(j: int) -> GrossValue:
    """Number of elements after adjoining j new elements: ① + j."""
    if j < 1:
        raise ValueError(f"j must be >= 1, got {j}")
    return GrossLinear(1, j).as_poly()


def tuples_size(d: int) -> GrossValue:
    """Number of d-tuples of natural numbers: ①^d."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return GrossPolynomial.grossone(power=d)


@dataclass(frozen=True)
class ProcessSpan:
    """A sequential process: starting position and positive length <= ①.

    Invalid spans are unrepresentable; construction enforces the cap.
    """

    start: GrossLinear
    length: GrossValue

    def __post_init__(self):
        length = as_value(self.length)
        object.__setattr__(self, "length", length)
        if value_sign(length) <= 0:
            raise NonPositiveCount(f"length must be positive, got {length}")
        if value_compare(length, GROSSONE) is Ordering.GREATER:
            raise SequenceCapExceeded(
                f"length {length} exceeds the ①-step cap"
            )
