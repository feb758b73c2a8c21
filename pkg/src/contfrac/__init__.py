"""Exact-arithmetic continued fraction toolkit.

Converts rationals to and from finite continued fractions, expands
quadratic irrationals into periodic continued fractions (and back),
solves Pell's equation via convergents, and classifies the convergence
of quadratic fixed-point recursions. No floating point in any core
computation.
"""

from .cf import (
    Convergent,
    FiniteCF,
    canonicalize,
    convergent_stream,
    convergents,
    evaluate,
    expand_rational,
)
from .errors import (
    CFSyntaxError,
    ContfracError,
    DivisionByZeroError,
    InsufficientCoefficientsError,
    InvariantError,
    NonPositiveRadicandError,
    PerfectSquareError,
    PeriodNotFoundError,
    ZeroDenominatorError,
)
from .iteration import (
    POLE,
    GoldenBoundRow,
    IterationTrace,
    MonicClassification,
    Verdict,
    classify_monic,
    golden_error_bound_check,
    iterate_monic,
    iterate_simple,
    limit_simple,
)
from .notation import format_cf, parse_cf
from .pell import (
    NoSolutionError,
    PellSolution,
    solve_fundamental,
    solve_negative,
    solve_positive,
    verify,
)
from .rational import Rational, arith, decimal_string, floor, parse_rational, rational
from .surd import (
    PeriodicCF,
    Quadratic,
    QuadraticSurd,
    conjugate,
    decimal_approx,
    expand_surd,
    periodic_to_surd,
    sqrt_cf,
    surd,
)

__version__ = "0.1.0"

__all__ = [
    "CFSyntaxError",
    "ContfracError",
    "Convergent",
    "DivisionByZeroError",
    "FiniteCF",
    "GoldenBoundRow",
    "InsufficientCoefficientsError",
    "InvariantError",
    "IterationTrace",
    "MonicClassification",
    "NoSolutionError",
    "NonPositiveRadicandError",
    "POLE",
    "PellSolution",
    "PerfectSquareError",
    "PeriodNotFoundError",
    "PeriodicCF",
    "Quadratic",
    "QuadraticSurd",
    "Rational",
    "Verdict",
    "ZeroDenominatorError",
    "arith",
    "canonicalize",
    "classify_monic",
    "conjugate",
    "convergent_stream",
    "convergents",
    "decimal_approx",
    "decimal_string",
    "evaluate",
    "expand_rational",
    "expand_surd",
    "floor",
    "format_cf",
    "golden_error_bound_check",
    "iterate_monic",
    "iterate_simple",
    "limit_simple",
    "parse_cf",
    "parse_rational",
    "periodic_to_surd",
    "rational",
    "solve_fundamental",
    "solve_negative",
    "solve_positive",
    "sqrt_cf",
    "surd",
    "verify",
]
