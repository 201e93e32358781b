"""Exceptions shared across the package.

Exit-code mapping for the CLI lives in ``dirph.cli``.
"""


class FormatError(ValueError):
    """An input file or literal could not be parsed exactly."""


class ResourceBudgetExceeded(RuntimeError):
    """A configured enumeration budget (simplices, circuits, map pairs, ...)
    would be exceeded.  Carries the offending count so callers can report it."""

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count
