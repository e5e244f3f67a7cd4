"""Exception hierarchy shared by all modules."""


class SubcanonicalError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(SubcanonicalError, ValueError):
    """Input data violates a type invariant (bad sequence, bad gap set, ...)."""


class PreconditionError(SubcanonicalError, ValueError):
    """Input is well formed but outside the domain of the requested operation."""


class DataIntegrityError(SubcanonicalError):
    """Stored table data disagrees with recomputed values."""


class InvariantViolation(SubcanonicalError, RuntimeError):
    """A defensive internal check failed. Indicates a bug, never bad input."""
