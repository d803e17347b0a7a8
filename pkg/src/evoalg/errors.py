"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 1 for malformed input,
2 for computational failures.
"""


class EvoAlgError(Exception):
    exit_code = 2


class SpecError(EvoAlgError):
    """Malformed graph spec or flag value."""

    exit_code = 1

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class IngestionError(EvoAlgError):
    """Bad edge-list or map file."""

    exit_code = 1

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ScalarDomainError(EvoAlgError):
    """Value is not representable as a radical scalar."""


class DegreeError(EvoAlgError):
    pass


class DimensionError(EvoAlgError):
    pass


class RegularityError(EvoAlgError):
    pass


class ConnectivityError(EvoAlgError):
    pass


class EvaluationError(EvoAlgError):
    pass


class UnsupportedError(EvoAlgError):
    pass
