"""AST -> GrossValue evaluation.

Arithmetic routes through the value layer; a power of a positive rational
by an affine form of ① is the gateway into exponential values.  Named
calls return values too: the fractal calls yield the total measure at the
given offset and step, reach yields the farthest reachable position,
countable yields 1 or 0, compare yields -1, 0, or 1, and approx yields the
exact rational substitution.  Arithmetic failures are re-raised with the
source span of the responsible subexpression attached.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import GrossError
from .fractals import snapshot
from .grosspoly import GrossPolynomial
from .parsing import Binary, Call, Expr, Grossone, Lit, Unary, parse
from .process import is_sequentially_countable, sequential_reach
from .values import (
    GROSSONE,
    GrossValue,
    as_gross_linear,
    value_add,
    value_compare,
    value_div,
    value_eval_at,
    value_mul,
    value_neg,
    value_pow,
    value_sub,
)

_BINARY_OPS = {
    "+": value_add,
    "-": value_sub,
    "*": value_mul,
    "/": value_div,
    "^": value_pow,
}


def evaluate(expr: Expr) -> GrossValue:
    """Evaluate a parsed expression to a canonical value."""
    if isinstance(expr, Lit):
        return GrossPolynomial.constant(expr.value)
    if isinstance(expr, Grossone):
        return GROSSONE
    if isinstance(expr, Unary):
        operand = evaluate(expr.operand)
        with _spanned(expr):
            return value_neg(operand)
    if isinstance(expr, Binary):
        lhs = evaluate(expr.lhs)
        rhs = evaluate(expr.rhs)
        with _spanned(expr):
            return _BINARY_OPS[expr.op](lhs, rhs)
    if isinstance(expr, Call):
        return _evaluate_call(expr)
    raise TypeError(f"not an expression node: {expr!r}")


def evaluate_text(text: str) -> GrossValue:
    return evaluate(parse(text))


def _evaluate_call(call: Call) -> GrossValue:
    args = [evaluate(arg) for arg in call.args]
    with _spanned(call):
        if call.name in ("carpet", "sponge", "cantor"):
            k = as_gross_linear(args[0])
            n = as_gross_linear(args[1])
            return snapshot(call.name, k, n).total_measure
        if call.name == "reach":
            return sequential_reach(as_gross_linear(args[0])).as_poly()
        if call.name == "countable":
            return GrossPolynomial.constant(
                1 if is_sequentially_countable(args[0]) else 0
            )
        if call.name == "compare":
            return GrossPolynomial.constant(int(value_compare(args[0], args[1])))
        if call.name == "approx":
            return GrossPolynomial.constant(
                value_eval_at(args[0], substitution_point(args[1]))
            )
    raise TypeError(f"unknown call {call.name!r}")


def substitution_point(v: GrossValue) -> int:
    """Validate a value as a finite substitution point for ①."""
    if isinstance(v, GrossPolynomial) and v.is_rational:
        q = v.as_rational()
        if q.denominator == 1 and q >= 1:
            return int(q)
    raise ValueError(f"substitution point must be a positive integer, got {v}")


class _spanned:
    """Attach the node's source span to any escaping GrossError."""

    def __init__(self, node: Expr):
        self.node = node

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        if isinstance(exc, GrossError) and exc.span is None:
            exc.span = self.node.span
        return False
