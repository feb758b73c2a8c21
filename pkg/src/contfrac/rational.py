"""Exact rational arithmetic on arbitrary-precision integers.

The package-wide rational type is the standard library ``Fraction``,
which already stores every value reduced with a positive denominator.
This module pins the constructor and operation surface the rest of the
package relies on, plus exact decimal rendering for display.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZeroError, ZeroDenominatorError

Rational = Fraction

_RATIONAL_TEXT = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(-?\d+)\s*)?$")


def rational(num: int, den: int = 1) -> Rational:
    """Reduced, positive-denominator representative of num/den."""
    if den == 0:
        raise ZeroDenominatorError(f"denominator of {num}/{den} is zero")
    return Fraction(num, den)


def arith(a: Rational, b: Rational, op: str) -> Rational:
    """Apply one of add|sub|mul|div exactly."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise DivisionByZeroError(f"cannot divide {a} by zero")
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def floor(a: Rational) -> int:
    """Greatest integer <= a (true floor, also for negatives)."""
    return math.floor(a)


def parse_rational(text: str) -> Rational:
    """Parse 'p/q' or a bare integer into an exact rational."""
    m = _RATIONAL_TEXT.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rational(num, den)


def decimal_string(a: Rational, digits: int) -> str:
    """Render a to `digits` decimal places, rounding halves away from zero."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    scaled = a * 10**digits
    n = math.floor(scaled + Fraction(1, 2)) if a >= 0 else -math.floor(-scaled + Fraction(1, 2))
    return format_scaled_decimal(n, digits)


def format_scaled_decimal(n: int, digits: int) -> str:
    """Format the integer n as n / 10**digits with a fixed-width fraction part."""
    sign = "-" if n < 0 else ""
    whole, frac = divmod(abs(n), 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
