"""Shared exception types."""


class QuasiplanarError(Exception):
    """Base class for all errors raised by this package."""


class OverlapSegmentsError(QuasiplanarError):
    """Two curves share a one-dimensional piece, which the drawing model forbids."""


class SearchBudgetExceeded(QuasiplanarError):
    """An exact search was asked to run past its configured budget."""
