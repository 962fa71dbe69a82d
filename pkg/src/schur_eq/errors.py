"""Exception types raised by the schur_eq package."""


class SchurEqError(ValueError):
    """Base class for every error raised deliberately by this package."""


class ParseError(SchurEqError):
    """A partition or shape string could not be parsed."""


class ContainmentViolation(SchurEqError):
    """The inner partition does not fit inside the outer partition."""


class EmptyShape(SchurEqError):
    """The skew diagram has no boxes."""


class DisconnectedShape(SchurEqError):
    """An operation that requires a connected skew diagram received a disconnected one."""


class InvalidFattening(SchurEqError):
    """Fattening parameters do not describe a connected skew diagram."""


class PreconditionViolation(SchurEqError):
    """An argument fails a documented precondition (e.g. column length vs. n)."""


class VariableCountMismatch(SchurEqError):
    """Two polynomials over different numbers of variables were compared."""
