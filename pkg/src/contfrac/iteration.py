"""Fixed-point iteration experiments on quadratic recursions.

Two families:

* t_{n+1} = kappa + 1/t_n, whose exact terms are the convergents of the
  all-kappa continued fraction and whose limit is (kappa + sqrt(kappa**2+4))/2.
* x_{k+1} = -b - c/x_k, the head recursion of the monic quadratic
  x**2 + b x + c = 0, whose convergence is classified by b and the
  discriminant b**2 - 4c.

Everything is exact rational or quadratic-field arithmetic; floats only
ever appear in callers that measure empirical convergence rates.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .rational import Rational, decimal_string
from .surd import Quadratic, QuadraticSurd


class Pole(enum.Enum):
    """In-band marker for an unbounded step in a monic iteration trace."""

    POLE = "pole"

    def __str__(self) -> str:
        return "∞"


POLE = Pole.POLE


@dataclass(frozen=True)
class IterationTrace:
    """Exact terms of t_{n+1} = kappa + 1/t_n plus fixed-precision decimals."""

    kappa: int
    seed: str
    terms: tuple[Rational, ...]
    decimals: tuple[str, ...]


def iterate_simple(
    kappa: int, n_terms: int, seed: str = "recurrence", digits: int = 3
) -> IterationTrace:
    """Exact trace of the kappa-recursion.

    seed="recurrence" starts from t_0 = kappa and applies the recurrence
    throughout. seed="paper" reproduces the hand-listed variant of the
    same table in which t_1 = kappa + 1 and the recurrence resumes from
    t_0, which shifts the remaining terms by one; for kappa = 1 the two
    seedings coincide.
    """
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    if seed not in ("recurrence", "paper"):
        raise ValueError(f"unknown seed mode {seed!r}")
    terms = [Fraction(kappa)]
    while len(terms) < n_terms:
        terms.append(kappa + 1 / terms[-1])
    if seed == "paper" and n_terms >= 2 and kappa >= 2:
        terms = [Fraction(kappa), Fraction(kappa + 1), *terms[1:]][:n_terms]
    decimals = tuple(decimal_string(t, digits) for t in terms)
    return IterationTrace(kappa, seed, tuple(terms), decimals)


def limit_simple(kappa: int) -> QuadraticSurd:
    """Limit (kappa + sqrt(kappa**2 + 4))/2 of the kappa-recursion."""
    if kappa < 1:
        raise ValueError("kappa must be >= 1")
    return QuadraticSurd(kappa, kappa * kappa + 4, 2)


@dataclass(frozen=True)
class GoldenBoundRow:
    """One exact comparison |R_n - phi| <= (1/phi)**(n-1) * |R_1 - phi|."""

    n: int
    lhs: Quadratic
    rhs: Quadratic
    holds: bool


def golden_error_bound_check(n_max: int) -> list[GoldenBoundRow]:
    """Check the golden-ratio error bound for Fibonacci ratios R_n.

    R_n is the ratio of consecutive Fibonacci numbers, R_1 = 1. All
    comparisons happen in the exact field extension by sqrt(5).
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    phi = Quadratic(Fraction(1, 2), Fraction(1, 2), 5)
    inv_phi = Quadratic(Fraction(-1, 2), Fraction(1, 2), 5)
    r1_error = abs(Quadratic.from_rational(Fraction(1), 5) - phi)
    rows = []
    fib_prev, fib_cur = 1, 1  # F_1, F_2
    for n in range(1, n_max + 1):
        ratio = Fraction(fib_cur, fib_prev)
        lhs = abs(Quadratic.from_rational(ratio, 5) - phi)
        rhs = inv_phi ** (n - 1) * r1_error
        rows.append(GoldenBoundRow(n, lhs, rhs, lhs <= rhs))
        fib_prev, fib_cur = fib_cur, fib_prev + fib_cur
    return rows


MonicTerm = Union[Rational, Pole]


def iterate_monic(b: Rational, c: Rational, x0: Rational, n_terms: int) -> list[MonicTerm]:
    """Exact trace of x_{k+1} = -b - c/x_k with projective pole handling.

    A zero term makes the next step unbounded; the trace records the
    pole marker and continues with -b (the limit of -b - c/x as x grows),
    so traces are total and divergence-by-oscillation stays observable.
    """
    if n_terms < 1:
        raise ValueError("n_terms must be >= 1")
    b, c, x0 = Fraction(b), Fraction(c), Fraction(x0)
    trace: list[MonicTerm] = [x0]
    while len(trace) < n_terms:
        prev = trace[-1]
        if prev is POLE:
            trace.append(-b)
        elif prev == 0:
            trace.append(POLE)
        else:
            trace.append(-b - c / prev)
    return trace


class Verdict(enum.Enum):
    """Convergence classes of the monic head recursion."""

    TOTALLY_DIVERGENT_B_ZERO = "totally-divergent-b-zero"
    OSCILLATORY_DIVERGENT = "oscillatory-divergent"
    CONVERGES_DOUBLE_ROOT = "converges-double-root"
    CONVERGES_LARGER_ROOT = "converges-larger-root"

    def __str__(self) -> str:
        return self.value


Root = Union[Rational, QuadraticSurd]


@dataclass(frozen=True)
class MonicClassification:
    """Verdict for x**2 + b x + c = 0 under the recursion x = -b - c/x."""

    b: Rational
    c: Rational
    discriminant: Rational
    verdict: Verdict
    root: Root | None = None
    ratio: Rational | Quadratic | None = None


def _rational_square_root(r: Rational) -> Rational | None:
    """sqrt(r) when r is the square of a rational, else None."""
    if r < 0:
        return None
    pn, pd = r.numerator, r.denominator
    sn, sd = math.isqrt(pn), math.isqrt(pd)
    if sn * sn == pn and sd * sd == pd:
        return Fraction(sn, sd)
    return None


def _surd_from_parts(offset: Rational, coeff: Rational, radicand: Rational) -> QuadraticSurd:
    """QuadraticSurd for offset + coeff*sqrt(radicand), coeff may be negative."""
    rn, rd = radicand.numerator, radicand.denominator
    d = rn * rd  # sqrt(rn/rd) = sqrt(rn*rd)/rd
    scaled_coeff = coeff / rd
    an, ad = offset.numerator, offset.denominator
    bn, bd = scaled_coeff.numerator, scaled_coeff.denominator
    q = ad * bd // math.gcd(ad, bd)
    p = an * (q // ad)
    f = bn * (q // bd)
    # (p + f*sqrt(d))/q  ->  fold |f| into the radicand, flip signs if f < 0.
    if f < 0:
        return QuadraticSurd(-p, f * f * d, -q)
    return QuadraticSurd(p, f * f * d, q)


def classify_monic(b: Rational, c: Rational) -> MonicClassification:
    """Classify the recursion x = -b - c/x by b and the discriminant."""
    b, c = Fraction(b), Fraction(c)
    disc = b * b - 4 * c
    if b == 0:
        return MonicClassification(b, c, disc, Verdict.TOTALLY_DIVERGENT_B_ZERO)
    if disc < 0:
        return MonicClassification(b, c, disc, Verdict.OSCILLATORY_DIVERGENT)
    if disc == 0:
        return MonicClassification(
            b, c, disc, Verdict.CONVERGES_DOUBLE_ROOT, root=-b / 2
        )
    rational_sqrt = _rational_square_root(disc)
    if rational_sqrt is not None:
        r1 = (-b + rational_sqrt) / 2
        r2 = (-b - rational_sqrt) / 2
        if abs(r2) > abs(r1):
            r1, r2 = r2, r1
        return MonicClassification(
            b, c, disc, Verdict.CONVERGES_LARGER_ROOT, root=r1, ratio=abs(r2 / r1)
        )
    # Irrational roots (-b +- sqrt(disc))/2: the larger in absolute value
    # lies on the side of -b.
    sign = 1 if b < 0 else -1
    root = _surd_from_parts(-b / 2, Fraction(sign, 2), disc)
    d = root.D
    big = root.as_quadratic()
    small = Quadratic.from_rational(-b, d) - big
    ratio = abs(small / big)
    return MonicClassification(
        b, c, disc, Verdict.CONVERGES_LARGER_ROOT, root=root, ratio=ratio
    )
