"""Exception hierarchy shared across the package."""


class PolygemError(Exception):
    """Base class for all package errors."""


class InputError(PolygemError):
    """Malformed or out-of-grammar user input (CLI exit code 2)."""


class VerificationError(PolygemError):
    """A verified property failed; carries a witness description (exit code 1)."""

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness


class InternalModelError(PolygemError):
    """An invariant the model guarantees was violated; indicates a bug."""
