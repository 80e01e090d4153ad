"""Shared exception types."""


class SizeCapError(ValueError):
    """Raised when a graph exceeds the configured cap of an exponential search."""
