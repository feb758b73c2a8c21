"""Pell's equation x**2 - n*y**2 = +-1 solved by scanning convergents of sqrt(n).

Every solution appears among the convergents of the periodic expansion
of sqrt(n); the scan substitutes each convergent exactly, so returned
solutions are proven, not approximate. The -1 equation is solvable
exactly when the period of sqrt(n) has odd length.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .cf import convergent_stream
from .errors import ContfracError
from .surd import sqrt_cf


class NoSolutionError(ContfracError):
    """x**2 - n*y**2 = -1 has no solution when the period of sqrt(n) is even."""


@dataclass(frozen=True)
class PellSolution:
    n: int
    x: int
    y: int
    sign: int

    def __post_init__(self) -> None:
        assert self.x * self.x - self.n * self.y * self.y == self.sign


def verify(n: int, x: int, y: int) -> int:
    """Exact value of x**2 - n*y**2."""
    return x * x - n * y * y


def _solution_scan(n: int) -> Iterator[PellSolution]:
    """All +-1 solutions of the Pell equation, in increasing x."""
    pcf = sqrt_cf(n)
    for conv in convergent_stream(pcf.coefficient_stream()):
        residue = verify(n, conv.p, conv.q)
        if residue in (1, -1):
            yield PellSolution(n, conv.p, conv.q, residue)


def solve_fundamental(n: int) -> PellSolution:
    """Smallest positive solution of x**2 - n*y**2 = +-1.

    The sign reports which equation it solves: -1 exactly when the
    period of sqrt(n) has odd length.
    """
    return next(iter(_solution_scan(n)))


def solve_positive(n: int, k: int) -> list[PellSolution]:
    """First k solutions of x**2 - n*y**2 = +1, in increasing x."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = []
    for sol in _solution_scan(n):
        if sol.sign == 1:
            out.append(sol)
            if len(out) == k:
                return out
    raise AssertionError("unreachable: +1 solutions recur every period")


def solve_negative(n: int, k: int) -> list[PellSolution]:
    """First k solutions of x**2 - n*y**2 = -1, or NoSolutionError."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if len(sqrt_cf(n).period) % 2 == 0:
        raise NoSolutionError(
            f"x²-{n}y²=-1 has no solution: period of √{n} is even"
        )
    out = []
    for sol in _solution_scan(n):
        if sol.sign == -1:
            out.append(sol)
            if len(out) == k:
                return out
    raise AssertionError("unreachable: -1 solutions recur for odd periods")
