"""
Error types shared by every monoid instance and by the CLI.

The CLI maps them onto exit codes: usage/parse/domain errors exit 1,
property violations exit 2, internal invariant violations exit 3.
"""

from __future__ import annotations


class MonoidError(Exception):
    """Base class for all errors raised by the algebra layer."""


class DomainError(MonoidError, ValueError):
    """Operands do not belong to the same monoid, or violate an instance precondition."""


class ParseError(MonoidError, ValueError):
    """A word, token or monoid selector could not be parsed."""


class NotLeftMultiple(MonoidError):
    """left_cancel(a, c) was asked for b with a·b = c, but no such b exists."""

    def __init__(self, message: str = "element is not a right multiple of the given divisor") -> None:
        super().__init__(message)


class NoCommonMultiple(MonoidError):
    """Two elements have no common right multiple (never raised by the shipped instances)."""


class SearchBoundExceeded(MonoidError, RuntimeError):
    """An exhaustive oracle could not finish within its configured word-length bound."""


class StepBoundExceeded(MonoidError, RuntimeError):
    """Subword reversing ran past its step cap."""


class InsufficientPairs(MonoidError, ValueError):
    """A pair chain is too short for the requested equation check."""


class InternalInvariantViolation(MonoidError, RuntimeError):
    """A fact guaranteed by the theory failed at runtime; results must not be trusted."""

    def __init__(self, message: str, dump: dict | None = None) -> None:
        super().__init__(message)
        self.dump = dump or {}
