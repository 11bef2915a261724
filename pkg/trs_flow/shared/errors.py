"""
Error hierarchy for trs-flow.

Every failure kind raised by the library is a ValueError subclass, so callers
that only care about "bad input" can keep catching ValueError. The exit_code
attribute is what the command line reports for the failure.
"""

from typing import Optional


EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_PRECISION = 4
EXIT_UNDECIDABLE = 5


class TrsFlowError(ValueError):
    """Base class of all domain errors."""

    exit_code: int = EXIT_PRECONDITION


# Series arithmetic

class UnitRequired(TrsFlowError):
    """Reciprocal requested for a series whose constant term vanishes."""


class EmptyPrecision(TrsFlowError):
    """An operation would leave no known coefficient."""

    exit_code = EXIT_PRECISION


class InsufficientPrecision(TrsFlowError):
    """Known coefficients do not reach the order needed to decide."""

    exit_code = EXIT_PRECISION


class NotDivisible(TrsFlowError):
    """A nonzero coefficient sits below the requested power of x."""


class ShapeError(TrsFlowError):
    """Sizes or block layouts do not match."""


# Transformations

class Inadmissible(TrsFlowError):
    """A transformation would introduce a pole or breaks a precondition."""


class NotRegular(TrsFlowError):
    """A polynomial gauge has a singular constant term."""


class Obstruction(TrsFlowError):
    """The homological equation has no solution at the given order."""

    def __init__(self, order: int, message: Optional[str] = None):
        self.order = order
        super().__init__(message or f"homological equation unsolvable at order {order}")


class Undecidable(TrsFlowError):
    """The question cannot be settled exactly at the available data."""

    exit_code = EXIT_UNDECIDABLE


class FuelExhausted(TrsFlowError):
    """An iterative reduction ran out of its step allowance."""

    exit_code = EXIT_PRECISION


# Couples and forms

class DegenerateCurve(TrsFlowError):
    """The curve lies in the formal singular locus to known order."""


class InvarianceViolated(TrsFlowError):
    """The curve is not invariant by the vector field."""


class HypothesisViolated(TrsFlowError):
    """A numeric hypothesis on (q, N, M) does not hold."""


# Numerics

class DomainError(TrsFlowError):
    """Evaluation requested outside x > 0."""


class Escape(TrsFlowError):
    """A trajectory left the domain bound before reaching its target."""

    def __init__(self, x_star: float, message: Optional[str] = None):
        self.x_star = x_star
        super().__init__(message or f"trajectory escaped at x={x_star:.6g}")


class SeedTooCoarse(TrsFlowError):
    """The seed escaped before covering the window; raise K or lower x_s."""


class InsufficientWindow(TrsFlowError):
    """The sample window is too short for a slope estimate."""


class TangentUndefined(TrsFlowError):
    """An iterated tangent limit did not converge."""

    def __init__(self, level: int, message: Optional[str] = None):
        self.level = level
        super().__init__(message or f"iterated tangent did not converge at level {level}")
