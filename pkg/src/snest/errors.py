"""Exception types shared across the package.

The CLI maps these onto exit codes: ParameterError -> 2,
DimensionMismatchError -> 3, InvalidStateError -> 4.
"""


class SnestError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(SnestError):
    """A numeric parameter is outside its admissible range or malformed."""


class DimensionMismatchError(SnestError):
    """Operands have incompatible shapes or subsystem dimensions."""


class InvalidStateError(SnestError):
    """A density matrix violates Hermiticity, positivity or unit trace."""
