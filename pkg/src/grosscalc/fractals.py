"""Exact snapshots of self-similar constructions at any step, finite or
infinite.

A snapshot fixes a fractal process (Cantor dust, the plane carpet keeping
8 of 9 squares, or the solid sponge keeping 20 of 27 cubes), the offset k
of its starting structure, and the step count n, and records the exact
piece count, piece size, and total measure.  With n = ① the measures come
out as exact exponential infinitesimals instead of the classical limit 0,
and two processes with different offsets stay distinguishable at every
step -- the ratio of their measures is an exact value.

The index arithmetic differs by one between the families: the interval
construction counts 2^n pieces after n removal rounds, while the carpet
and sponge count their first state (n = 1) as the single starting piece.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import FractalMismatch, RangeViolation, RangeViolationAtSubstitution
from .expmeasure import exp_make
from .grosspoly import GrossLinear
from .values import (
    GrossValue,
    Ordering,
    as_value,
    value_compare,
    value_div,
    value_eval_at,
    value_mul,
    value_pow,
)


class _FractalRule(NamedTuple):
    dim: int
    pieces: int  # sub-pieces kept per subdivision step
    shrink: int  # linear scale factor per step
    index_shift: int  # exponent is n + k + index_shift


_RULES: dict[str, _FractalRule] = {
    "cantor": _FractalRule(dim=1, pieces=2, shrink=3, index_shift=-1),
    "carpet": _FractalRule(dim=2, pieces=8, shrink=3, index_shift=-2),
    "sponge": _FractalRule(dim=3, pieces=20, shrink=3, index_shift=-2),
}

FRACTAL_NAMES = tuple(_RULES)


@dataclass(frozen=True)
class FractalSnapshot:
    """State of a fractal process at offset k, step n."""

    fractal: str
    offset_k: GrossLinear
    step_n: GrossLinear
    piece_count: GrossValue
    piece_size: GrossValue
    total_measure: GrossValue

    @property
    def dim(self) -> int:
        return _RULES[self.fractal].dim

    def to_json(self) -> dict:
        from .values import linear_to_json, value_to_json

        return {
            "fractal": self.fractal,
            "k": linear_to_json(self.offset_k),
            "n": linear_to_json(self.step_n),
            "count": value_to_json(self.piece_count),
            "size": value_to_json(self.piece_size),
            "measure": value_to_json(self.total_measure),
        }


def _check_range(k: GrossLinear, n: GrossLinear) -> None:
    one = GrossLinear(0, 1)
    if k < one:
        raise RangeViolation(f"1 <= k violated: k = {k}")
    if n < k:
        raise RangeViolation(f"k <= n violated: k = {k}, n = {n}")
    upper = GrossLinear(k.gross_coeff + 1, k.const_part - 1)
    if n > upper:
        raise RangeViolation(
            f"n <= ①+k-1 violated: n = {n}, ①+k-1 = {upper}"
        )


def _snapshot(name: str, k: GrossLinear, n: GrossLinear) -> FractalSnapshot:
    rule = _RULES[name]
    _check_range(k, n)
    e = n + k + rule.index_shift
    count = as_value(exp_make(rule.pieces, e))
    size = as_value(exp_make(Fraction(1, rule.shrink), e))
    measure = as_value(
        exp_make(Fraction(rule.pieces, rule.shrink**rule.dim), e)
    )
    # The measure law, kept live: total measure == size^dim * count.
    assert value_mul(value_pow(size, rule.dim), count) == measure
    return FractalSnapshot(
        fractal=name,
        offset_k=k,
        step_n=n,
        piece_count=count,
        piece_size=size,
        total_measure=measure,
    )


def cantor_snapshot(k: GrossLinear, n: GrossLinear) -> FractalSnapshot:
    """Interval dust at offset k, step n: 2^(n+k-1) intervals of length
    3^-(n+k-1)."""
    return _snapshot("cantor", k, n)


def carpet_snapshot(k: GrossLinear, n: GrossLinear) -> FractalSnapshot:
    """Plane carpet at offset k, step n: 8^(n+k-2) squares of side
    3^-(n+k-2), total area (8/9)^(n+k-2)."""
    return _snapshot("carpet", k, n)


def sponge_snapshot(k: GrossLinear, n: GrossLinear) -> FractalSnapshot:
    """Solid sponge at offset k, step n: 20^(n+k-2) cubes of side
    3^-(n+k-2), total volume (20/27)^(n+k-2)."""
    return _snapshot("sponge", k, n)


def snapshot(name: str, k: GrossLinear, n: GrossLinear) -> FractalSnapshot:
    if name not in _RULES:
        raise ValueError(f"unknown fractal {name!r}; expected one of {FRACTAL_NAMES}")
    return _snapshot(name, k, n)


def distinguish(
    a: FractalSnapshot, b: FractalSnapshot
) -> tuple[Ordering, GrossValue]:
    """Order two snapshots of the same fractal by total measure and return
    the exact ratio of the measures; different offsets at the same step are
    always told apart."""
    if a.fractal != b.fractal:
        raise FractalMismatch(
            f"cannot compare {a.fractal} snapshot with {b.fractal} snapshot"
        )
    ordering = value_compare(a.total_measure, b.total_measure)
    ratio = value_div(a.total_measure, b.total_measure)
    return ordering, ratio


def finite_approximation(
    s: FractalSnapshot, m: int
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact rational (count, size, measure) with ① replaced by m."""
    if m < 1:
        raise ValueError(f"substitution point must be >= 1, got {m}")
    k_m = s.offset_k.evaluate(m)
    n_m = s.step_n.evaluate(m)
    if not 1 <= k_m:
        raise RangeViolationAtSubstitution(
            f"1 <= k violated at ①={m}: k = {k_m}"
        )
    if not k_m <= n_m:
        raise RangeViolationAtSubstitution(
            f"k <= n violated at ①={m}: k = {k_m}, n = {n_m}"
        )
    if not n_m <= m + k_m - 1:
        raise RangeViolationAtSubstitution(
            f"n <= ①+k-1 violated at ①={m}: n = {n_m}, "
            f"①+k-1 = {m + k_m - 1}"
        )
    return (
        value_eval_at(s.piece_count, m),
        value_eval_at(s.piece_size, m),
        value_eval_at(s.total_measure, m),
    )
