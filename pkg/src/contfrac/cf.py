"""Finite continued fractions and their convergents.

Expansion uses the Euclidean algorithm with true floor steps, so a
negative rational gets a (possibly negative) leading coefficient and a
strictly positive tail. The expansion never emits a trailing 1, which
makes its output canonical by construction; ``canonicalize`` exists for
coefficient lists built by other means.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import InsufficientCoefficientsError, InvariantError
from .rational import Rational


@dataclass(frozen=True)
class FiniteCF:
    """Coefficient list [a0; a1, ..., an] of a rational number."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(int(a) for a in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 1:
            raise InvariantError("a continued fraction needs at least one coefficient")
        for i, a in enumerate(coeffs[1:], start=1):
            if a < 1:
                raise InvariantError(f"coefficient a{i}={a} must be >= 1")

    def __len__(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class Convergent:
    """Truncation p/q of a continued fraction after index+1 coefficients."""

    index: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise InvariantError(f"convergent denominator {self.q} must be >= 1")

    @property
    def value(self) -> Rational:
        return Fraction(self.p, self.q)


def expand_rational(r: Rational) -> FiniteCF:
    """Expand a rational into its canonical continued fraction."""
    coeffs = []
    x = Fraction(r)
    while True:
        a = math.floor(x)
        coeffs.append(a)
        frac = x - a
        if frac == 0:
            return FiniteCF(tuple(coeffs))
        x = 1 / frac


def evaluate(cf: FiniteCF) -> Rational:
    """Exact value of a finite continued fraction by back-substitution."""
    coeffs = cf.coefficients
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a + 1 / value
    return value


def canonicalize(cf: FiniteCF) -> FiniteCF:
    """Merge a trailing 1 into the previous coefficient; idempotent."""
    coeffs = cf.coefficients
    if len(coeffs) > 1 and coeffs[-1] == 1:
        return FiniteCF(coeffs[:-2] + (coeffs[-2] + 1,))
    return cf


def convergent_stream(coeffs: Iterable[int]) -> Iterator[Convergent]:
    """Yield successive convergents of a (possibly infinite) coefficient stream.

    Fundamental recurrences p_n = a_n p_{n-1} + p_{n-2} and
    q_n = a_n q_{n-1} + q_{n-2}, seeded with p_{-1}=1, p_{-2}=0,
    q_{-1}=0, q_{-2}=1.
    """
    p_prev, p_prev2 = 1, 0
    q_prev, q_prev2 = 0, 1
    for n, a in enumerate(coeffs):
        a = int(a)
        if n >= 1 and a < 1:
            raise InvariantError(f"coefficient a{n}={a} must be >= 1")
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        yield Convergent(n, p, q)
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q


def convergents(coeffs: FiniteCF | Iterable[int], count: int) -> list[Convergent]:
    """First `count` convergents of a coefficient list or stream."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if isinstance(coeffs, FiniteCF):
        coeffs = coeffs.coefficients
    out = []
    for conv in convergent_stream(coeffs):
        out.append(conv)
        if len(out) == count:
            return out
    raise InsufficientCoefficientsError(
        f"requested {count} convergents but only {len(out)} coefficients are available"
    )
