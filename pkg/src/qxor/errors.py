"""Exception types shared across the package."""


class QxorError(Exception):
    """Base class for all package errors."""


class InputError(QxorError, ValueError):
    """Rejected input: bad dimensions, out-of-range values, invalid config."""


class ParseError(InputError):
    """Malformed instance text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class CapabilityError(QxorError):
    """Request outside an engine's supported regime (e.g. graph engine with e != 2)."""
