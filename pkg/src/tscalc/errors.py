"""Exception hierarchy shared across the package.

Every error the library raises deliberately derives from ``TscalcError`` so
callers (the CLI in particular) can distinguish contract violations from
genuine bugs, which surface as ordinary Python exceptions.
"""

from __future__ import annotations

__all__ = ["TscalcError", "InputError", "DomainError", "DegenerateKernelError"]


class TscalcError(Exception):
    """Base class for all deliberate library errors."""


class InputError(TscalcError):
    """An argument value is malformed or outside the documented contract."""


class DomainError(TscalcError):
    """A point lies outside the time scale or the required kappa set."""


class DegenerateKernelError(TscalcError):
    """A kernel-derived weight vanished where a positive value is required."""
