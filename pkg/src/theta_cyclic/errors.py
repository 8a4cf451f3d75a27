"""Exception taxonomy.

Two top-level failure classes, mirrored by the CLI exit codes:
ValidationError (bad input, exit 2) and NumericalError (a computation
that started from valid input failed to reach the requested accuracy or
landed in a region where no verdict is possible, exit 3).
"""


class ThetaCyclicError(Exception):
    """Base class for all package errors."""


class ValidationError(ThetaCyclicError):
    """Input violates a documented precondition."""


class NumericalError(ThetaCyclicError):
    """A numerical computation failed to converge or is untrustworthy."""


class QuadratureError(NumericalError):
    """Contour integration did not reach the requested tolerance."""


class IndeterminateError(NumericalError):
    """A floating-point locus test fell between the decision thresholds."""
