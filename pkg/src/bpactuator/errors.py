"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input value violates a documented constraint.

    ``field`` names the offending parameter so callers (and the CLI) can
    point the user at it.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ExportError(RuntimeError):
    """A file could not be written; carries the path and the cause."""

    def __init__(self, path, cause: BaseException):
        self.path = path
        self.cause = cause
        super().__init__(f"failed to write {path}: {cause}")


class DatasetFormatError(ValueError):
    """A calibration CSV is malformed; carries the 1-based line number."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
