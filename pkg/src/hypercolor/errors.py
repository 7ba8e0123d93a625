"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class HypercolorError(Exception):
    exit_code = 1
    code = "error"


class ValidationError(HypercolorError, ValueError):
    """Malformed input: bad JSON, ids out of range, shape mismatches."""

    exit_code = 2
    code = "validation"


class NotPerfect(HypercolorError):
    """Raised when a coloring is not perfect.

    ``witness`` holds two same-colored vertices whose multisets of incident
    color ranges differ.
    """

    exit_code = 3
    code = "not_perfect"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotACovering(HypercolorError):
    exit_code = 4
    code = "not_a_covering"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class GuardExceeded(HypercolorError):
    """A brute-force or dense-storage size limit was hit."""

    exit_code = 5
    code = "guard_exceeded"
