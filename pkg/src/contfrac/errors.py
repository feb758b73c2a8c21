"""Exception hierarchy shared by all contfrac modules."""


class ContfracError(Exception):
    """Base class for all domain errors raised by this package."""


class ZeroDenominatorError(ContfracError):
    """A rational or surd was constructed with a zero denominator."""


class DivisionByZeroError(ContfracError):
    """Exact division by an exact zero."""


class InsufficientCoefficientsError(ContfracError):
    """More convergents were requested than coefficients are available."""


class NonPositiveRadicandError(ContfracError):
    """The radicand of a quadratic surd must be a positive integer."""


class PerfectSquareError(ContfracError):
    """The radicand is a perfect square, so the value is rational.

    Rational values are handled by the finite continued fraction
    machinery, never silently by the surd engine.
    """


class PeriodNotFoundError(ContfracError):
    """Expansion hit its term budget before the state cycle closed.

    Cannot happen for a valid quadratic surd; the budget is a safety
    valve against misuse.
    """


class CFSyntaxError(ContfracError):
    """Malformed continued fraction text. Carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvariantError(ContfracError):
    """Structurally valid input that violates a domain invariant."""
