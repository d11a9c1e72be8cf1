"""Error types raised by the calculus.

Every error carries a short message suitable for the CLI diagnostic line.
"""


class CalculusError(Exception):
    """Base class for all errors raised by this package."""


class DescriptorParseError(CalculusError, ValueError):
    """A ring descriptor string could not be parsed."""


class DescriptorMismatchError(CalculusError, ValueError):
    """Operands live over different rings, algebras or truncations."""


class PreconditionError(CalculusError, ValueError):
    """An operation was called outside the hypotheses it needs."""


class TruncationError(CalculusError, ValueError):
    """The requested working precision cannot hold the exact result."""


class DivisibilityError(CalculusError, ArithmeticError):
    """An exact division that a theorem guarantees did not go through.

    Raised by the coefficient tables; reaching it means a stated identity
    is false for the given inputs.
    """


class UnderSaturationError(CalculusError):
    """Sections found below the degree bound do not span a full-rank module."""


class InternalConsistencyError(CalculusError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class UnknownSuiteError(CalculusError, LookupError):
    """No verification suite is registered under the requested name."""
