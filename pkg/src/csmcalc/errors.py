"""Exception hierarchy shared by all modules.

Every error carries the process exit code used by the command-line front
end: 2 parse, 3 validation, 4 degenerate invariants, 5 inconsistent system.
"""


class CharClassError(Exception):
    """Base class for all errors raised by this package."""

    exit_code = 1


class InputParseError(CharClassError):
    """Malformed input: bad JSON, unknown or missing keys, bad rational literals."""

    exit_code = 2


class ValidationError(CharClassError):
    """Structurally sound input that violates a documented precondition."""

    exit_code = 3


class DimensionMismatchError(ValidationError):
    """Operands declare different ambient projective dimensions."""


class NonUnitError(ValidationError):
    """Series inversion requires a nonzero constant term."""


class UnderdeterminedSystemError(ValidationError):
    """Invariant recovery needs a rank-2 system (requires d != 0 and dim Y' > 0)."""


class DegenerateInvariantsError(CharClassError):
    """chi = 1 or chi = Eu leaves the interpolation parameter undefined."""

    exit_code = 4


class InconsistentSystemError(CharClassError):
    """Overdetermined invariant system with no exact solution."""

    exit_code = 5
