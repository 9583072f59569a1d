"""Exception hierarchy shared by all momang modules."""


class MomangError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(MomangError):
    """Input data violates a structural invariant."""


class ShapeError(MomangError):
    """Matrix or vector dimensions do not match."""


class BudgetError(MomangError):
    """An exhaustive search or enumeration exceeds its configured bound."""

    def __init__(self, message, bound):
        super().__init__(message)
        self.bound = bound


class IntegrityError(MomangError):
    """An internal consistency check failed (corrupt presentation or pair)."""


class IncomparableError(MomangError):
    """The two inputs do not live over comparable combinatorial data."""


class UnsupportedBaseError(MomangError):
    """No degree-4 presentation is available for this quoric base."""
