"""Exact quadratic irrationals and their periodic continued fractions.

A surd is stored as the integer triple (P, D, Q) for the value
(P + sqrt(D))/Q with D positive and non-square, normalized so that Q
divides D - P**2. That divisibility keeps the expansion recurrence

    a = floor((P + sqrt(D))/Q),  P' = a*Q - P,  Q' = (D - P'**2)/Q

inside the integers; the (P, Q) state space is eventually periodic, so
the expansion cycle is detected exactly by hashing visited states.

Two triples can denote the same value (the radicand may carry square
factors), so surd equality compares the rational part P/Q and the
squared irrational part D/Q**2 instead of the raw fields.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .cf import convergent_stream, convergents
from .errors import (
    InvariantError,
    NonPositiveRadicandError,
    PerfectSquareError,
    PeriodNotFoundError,
    ZeroDenominatorError,
)
from .rational import Rational, format_scaled_decimal

DEFAULT_EXPANSION_BUDGET = 10_000


@dataclass(frozen=True)
class Quadratic:
    """Exact element a + b*sqrt(d) of the quadratic field over the rationals.

    d is a fixed positive non-square integer; arithmetic mixes only
    elements with the same d. Comparisons are exact via sign analysis,
    never floating point.
    """

    a: Fraction
    b: Fraction
    d: int

    @staticmethod
    def from_rational(value: Rational, d: int) -> "Quadratic":
        return Quadratic(Fraction(value), Fraction(0), d)

    def _check(self, other: "Quadratic") -> None:
        if self.d != other.d:
            raise ValueError(f"mixed radicands {self.d} and {other.d}")

    def __add__(self, other: "Quadratic") -> "Quadratic":
        self._check(other)
        return Quadratic(self.a + other.a, self.b + other.b, self.d)

    def __sub__(self, other: "Quadratic") -> "Quadratic":
        self._check(other)
        return Quadratic(self.a - other.a, self.b - other.b, self.d)

    def __neg__(self) -> "Quadratic":
        return Quadratic(-self.a, -self.b, self.d)

    def __mul__(self, other: "Quadratic") -> "Quadratic":
        self._check(other)
        return Quadratic(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    def __truediv__(self, other: "Quadratic") -> "Quadratic":
        self._check(other)
        norm = other.a * other.a - other.b * other.b * other.d
        if norm == 0:
            raise ZeroDivisionError("division by zero quadratic element")
        recip = Quadratic(other.a / norm, -other.b / norm, other.d)
        return self * recip

    def __pow__(self, exponent: int) -> "Quadratic":
        if exponent < 0:
            raise ValueError("negative powers not needed; divide instead")
        result = Quadratic(Fraction(1), Fraction(0), self.d)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(d): compare a**2 against b**2 d."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        if self.a > 0 and self.b > 0:
            return 1
        if self.a < 0 and self.b < 0:
            return -1
        lhs, rhs = self.a * self.a, self.b * self.b * self.d
        if self.a > 0:  # b < 0
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)  # a < 0, b > 0

    def __abs__(self) -> "Quadratic":
        return -self if self.sign() < 0 else self

    def __lt__(self, other: "Quadratic") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "Quadratic") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "Quadratic") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "Quadratic") -> bool:
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)


@dataclass(frozen=True)
class PeriodicCF:
    """Eventually periodic continued fraction: pre-period then repeating period.

    Construction canonicalizes: the period is reduced to its minimal
    repeating unit and any pre-period tail that merely repeats the end
    of the period is absorbed into it, so structural equality matches
    value equality.
    """

    pre_period: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        pre = [int(a) for a in self.pre_period]
        per = [int(a) for a in self.period]
        if not per:
            raise InvariantError("period must be nonempty")
        for a in per:
            if a < 1:
                raise InvariantError(f"period coefficient {a} must be >= 1")
        for i, a in enumerate(pre):
            if i >= 1 and a < 1:
                raise InvariantError(f"pre-period coefficient a{i}={a} must be >= 1")
        # Minimal repeating unit.
        h = len(per)
        for d in range(1, h + 1):
            if h % d == 0 and per == per[:d] * (h // d):
                per = per[:d]
                break
        # Absorb a pre-period tail that duplicates the period's end.
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = [per[-1]] + per[:-1]
        object.__setattr__(self, "pre_period", tuple(pre))
        object.__setattr__(self, "period", tuple(per))

    def coefficient_stream(self) -> Iterator[int]:
        """Pre-period once, then the period forever."""
        return itertools.chain(self.pre_period, itertools.cycle(self.period))

    def prefix(self, count: int) -> list[int]:
        return list(itertools.islice(self.coefficient_stream(), count))


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The quadratic irrational (P + sqrt(D))/Q, normalized on construction."""

    P: int
    D: int
    Q: int

    def __post_init__(self) -> None:
        P, D, Q = int(self.P), int(self.D), int(self.Q)
        if Q == 0:
            raise ZeroDenominatorError("surd denominator Q must be nonzero")
        if D <= 0:
            raise NonPositiveRadicandError(f"radicand D={D} must be positive")
        if math.isqrt(D) ** 2 == D:
            raise PerfectSquareError(
                f"radicand D={D} is a perfect square; the value is rational"
            )
        P, D, Q = _normalize(P, D, Q)
        object.__setattr__(self, "P", P)
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "Q", Q)

    # Distinct triples can carry the same value, e.g. (2+sqrt(8))/2 and
    # 1+sqrt(2), so equality goes through P/Q and D/Q**2.
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticSurd):
            return NotImplemented
        return (
            self.P * other.Q == other.P * self.Q
            and self.D * other.Q**2 == other.D * self.Q**2
        )

    def __hash__(self) -> int:
        return hash((Fraction(self.P, self.Q), Fraction(self.D, self.Q * self.Q)))

    def conjugate(self) -> "QuadraticSurd":
        """The other root (P - sqrt(D))/Q of the same quadratic."""
        return QuadraticSurd(-self.P, self.D, -self.Q)

    def as_quadratic(self) -> Quadratic:
        return Quadratic(Fraction(self.P, self.Q), Fraction(1, self.Q), self.D)

    def monic_coefficients(self) -> tuple[Rational, Rational]:
        """(b, c) of the monic quadratic x**2 + b x + c with this value as a root."""
        trace = Fraction(2 * self.P, self.Q)
        norm = Fraction(self.P * self.P - self.D, self.Q * self.Q)
        return -trace, norm

    def decimal(self, digits: int) -> str:
        return decimal_approx(self, digits)

    def __float__(self) -> float:
        return (self.P + math.sqrt(self.D)) / self.Q

    def __str__(self) -> str:
        # Render with a positive denominator: (P + sqrt(D))/Q or its negation.
        p, q, sign = (self.P, self.Q, "+") if self.Q > 0 else (-self.P, -self.Q, "-")
        root = f"√{self.D}"
        if p == 0:
            head = root if sign == "+" else f"-{root}"
        else:
            head = f"{p}{sign}{root}"
        if q == 1:
            return head
        return f"({head})/{q}"


def _normalize(P: int, D: int, Q: int) -> tuple[int, int, int]:
    """Scale the triple so Q | D - P**2, then strip shared square factors."""
    r = D - P * P
    if r % Q != 0:
        s = abs(Q) // math.gcd(abs(Q), r)
        P, D, Q = P * s, D * s * s, Q * s
    g = math.gcd(P, Q)
    if g > 1:
        for e in _divisors_descending(g):
            if e == 1:
                break
            if D % (e * e) == 0 and ((D - P * P) // (e * e)) % (Q // e) == 0:
                P, D, Q = P // e, D // (e * e), Q // e
                break
    return P, D, Q


def _divisors_descending(n: int) -> list[int]:
    small, large = [], []
    for i in range(1, math.isqrt(n) + 1):
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
    return sorted(small + large, reverse=True)


def surd(P: int, D: int, Q: int) -> QuadraticSurd:
    """Construct the quadratic irrational (P + sqrt(D))/Q."""
    return QuadraticSurd(P, D, Q)


def conjugate(s: QuadraticSurd) -> QuadraticSurd:
    """Function form of QuadraticSurd.conjugate."""
    return s.conjugate()


def _floor_surd(P: int, D: int, Q: int) -> int:
    """floor((P + sqrt(D))/Q) in pure integer arithmetic."""
    s = math.isqrt(D)
    if Q > 0:
        return (P + s) // Q
    return (P + s + 1) // Q


def expand_surd(s: QuadraticSurd, max_terms: int = DEFAULT_EXPANSION_BUDGET) -> PeriodicCF:
    """Eventually periodic expansion of a quadratic surd.

    Iterates the integer (P, Q) recurrence and stops at the first
    repeated state; the coefficients before it form the pre-period and
    the cycle forms the (automatically minimal) period.
    """
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    P, D, Q = s.P, s.D, s.Q
    seen: dict[tuple[int, int], int] = {}
    coeffs: list[int] = []
    while True:
        state = (P, Q)
        if state in seen:
            start = seen[state]
            return PeriodicCF(tuple(coeffs[:start]), tuple(coeffs[start:]))
        if len(coeffs) >= max_terms:
            raise PeriodNotFoundError(
                f"no period within {max_terms} terms for ({s.P}+√{s.D})/{s.Q}"
            )
        seen[state] = len(coeffs)
        a = _floor_surd(P, D, Q)
        coeffs.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q


def sqrt_cf(n: int, max_terms: int = DEFAULT_EXPANSION_BUDGET) -> PeriodicCF:
    """Periodic continued fraction of sqrt(n) for non-square n >= 2."""
    if n <= 0:
        raise NonPositiveRadicandError(f"radicand {n} must be positive")
    if math.isqrt(n) ** 2 == n:
        raise PerfectSquareError(f"{n} is a perfect square")
    return expand_surd(QuadraticSurd(0, n, 1), max_terms)


def _mobius_apply(a: int, b: int, c: int, d: int, y: QuadraticSurd) -> QuadraticSurd:
    """(a*y + b)/(c*y + d) for an integer matrix with determinant +-1."""
    det = a * d - b * c
    if abs(det) != 1:
        raise ValueError("matrix determinant must be +-1")
    P, D, Q = y.P, y.D, y.Q
    num = (a * P + b * Q) * (c * P + d * Q) - a * c * D
    den = (c * P + d * Q) ** 2 - c * c * D
    # Irrational coefficient of the raw quotient is Q*det; divide through.
    return QuadraticSurd(num // (det * Q), D, den // (det * Q))


def periodic_to_surd(pcf: PeriodicCF) -> QuadraticSurd:
    """Exact quadratic irrational with the given periodic expansion.

    The purely periodic tail y satisfies y = (p*y + p')/(q*y + q') for
    the last two convergents of one period; take the root greater
    than 1, then fold the pre-period back with Moebius steps.
    """
    period = pcf.period
    convs = convergents(period, len(period))
    p_last, q_last = convs[-1].p, convs[-1].q
    if len(convs) >= 2:
        p_prev, q_prev = convs[-2].p, convs[-2].q
    else:
        p_prev, q_prev = 1, 0  # seed convergent p_{-1}/q_{-1}
    # q_last*y**2 + (q_prev - p_last)*y - p_prev = 0, root > 1.
    disc = (q_prev - p_last) ** 2 + 4 * q_last * p_prev
    y = QuadraticSurd(p_last - q_prev, disc, 2 * q_last)
    if not pcf.pre_period:
        return y
    head = convergents(pcf.pre_period, len(pcf.pre_period))
    a, c = head[-1].p, head[-1].q
    if len(head) >= 2:
        b, d = head[-2].p, head[-2].q
    else:
        b, d = 1, 0
    return _mobius_apply(a, b, c, d, y)


def decimal_approx(s: QuadraticSurd, digits: int) -> str:
    """Correctly rounded decimal rendering of a surd.

    Uses a convergent p/q with q*q_next large enough that the value is
    pinned inside an interval smaller than the rounding granularity;
    widens the requirement and retries in the rare ambiguous case.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    pcf = expand_surd(s)
    scale = 10**digits
    half = Fraction(1, 2)
    need = 10 ** (digits + 2)
    prev = None
    for conv in convergent_stream(pcf.coefficient_stream()):
        if prev is not None and prev.q * conv.q > need:
            value = Fraction(prev.p, prev.q)
            eps = Fraction(1, prev.q * conv.q)
            lo = math.floor((value - eps) * scale + half)
            hi = math.floor((value + eps) * scale + half)
            if lo == hi:
                return format_scaled_decimal(lo, digits)
            need *= 100  # value too close to a rounding boundary
        prev = conv
    raise AssertionError("unreachable: coefficient stream is infinite")
