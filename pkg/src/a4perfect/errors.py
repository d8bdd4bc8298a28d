"""Exception types shared across the package; the CLI maps them to exit codes."""

from __future__ import annotations


class DomainError(ValueError):
    """Input outside the supported domain (exit code 1)."""


class InvariantViolation(AssertionError):
    """A computed object broke a property the theory guarantees (exit code 2)."""


class HomologyBoundError(DomainError):
    """The degree bound was reached before the homology stop rule fired."""
