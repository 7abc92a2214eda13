"""Shared exception types."""


class QuivalgError(Exception):
    """Base class for all engine errors."""


class InputError(QuivalgError):
    """Malformed or rejected input (bad presentation, violated precondition)."""


class UnsupportedFieldError(QuivalgError):
    """The field modulus is too small for the requested table-mode computation."""


class BudgetError(QuivalgError):
    """A configured dimension budget would be exceeded."""


class InternalCheckError(QuivalgError):
    """An internal consistency cross-check failed; indicates a bug, not bad data."""
