"""grosscalc: exact arithmetic for grossone-based infinite and
infinitesimal numbers.

The infinite unit ① (grossone) obeys ordinary arithmetic, so quantities
like ①-1, ①^3, 8^(①-1), and (8/9)^(①-1) are first-class exact values
with a single total order.  On top of the arithmetic sit a process model
(any sequential process has at most ① steps) and exact fractal snapshots:
the measures of interval dust, the plane carpet, and the solid sponge at
any step, finite or infinite, come out as exact numbers instead of limits,
and substituting a finite integer for ① recovers the classical values.
"""

from .errors import (
    BaseTooLarge,
    ExprSyntaxError,
    FractalMismatch,
    GrossError,
    InvalidStart,
    MixedScaleAddition,
    NonIntegralPower,
    NonPositiveBase,
    NonPositiveCount,
    NotDivisible,
    RangeViolation,
    RangeViolationAtSubstitution,
    SequenceCapExceeded,
    UnrepresentableOperation,
)
from .evaluate import evaluate, evaluate_text
from .expmeasure import ExpMeasure, exp_make, factorize
from .fractals import (
    FractalSnapshot,
    cantor_snapshot,
    carpet_snapshot,
    distinguish,
    finite_approximation,
    snapshot,
    sponge_snapshot,
)
from .grosspoly import (
    GROSSONE_ASCII,
    GROSSONE_LINEAR,
    GROSSONE_SYMBOL,
    GrossLinear,
    GrossPolynomial,
    rational_pow,
)
from .parsing import parse
from .process import (
    ProcessSpan,
    is_sequentially_countable,
    max_sequence_length,
    naturals_size,
    naturals_size_adding,
    naturals_size_removing,
    sequential_reach,
    tuples_size,
)
from .values import (
    GROSSONE,
    ONE,
    ZERO,
    GrossValue,
    Ordering,
    as_gross_linear,
    as_value,
    format_value,
    linear_to_json,
    value_add,
    value_compare,
    value_div,
    value_eval_at,
    value_mul,
    value_neg,
    value_pow,
    value_sub,
    value_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "BaseTooLarge",
    "ExpMeasure",
    "ExprSyntaxError",
    "FractalMismatch",
    "FractalSnapshot",
    "GROSSONE",
    "GROSSONE_ASCII",
    "GROSSONE_LINEAR",
    "GROSSONE_SYMBOL",
    "GrossError",
    "GrossLinear",
    "GrossPolynomial",
    "GrossValue",
    "InvalidStart",
    "MixedScaleAddition",
    "NonIntegralPower",
    "NonPositiveBase",
    "NonPositiveCount",
    "NotDivisible",
    "ONE",
    "Ordering",
    "ProcessSpan",
    "RangeViolation",
    "RangeViolationAtSubstitution",
    "SequenceCapExceeded",
    "UnrepresentableOperation",
    "ZERO",
    "as_gross_linear",
    "as_value",
    "cantor_snapshot",
    "carpet_snapshot",
    "distinguish",
    "evaluate",
    "evaluate_text",
    "exp_make",
    "factorize",
    "finite_approximation",
    "format_value",
    "is_sequentially_countable",
    "linear_to_json",
    "max_sequence_length",
    "naturals_size",
    "naturals_size_adding",
    "naturals_size_removing",
    "parse",
    "rational_pow",
    "sequential_reach",
    "snapshot",
    "sponge_snapshot",
    "tuples_size",
    "value_add",
    "value_compare",
    "value_div",
    "value_eval_at",
    "value_mul",
    "value_neg",
    "value_pow",
    "value_sub",
    "value_to_json",
]
