"""
Exception hierarchy for pi-forge.

Every error raised deliberately by the library derives from PiForgeError,
so callers can catch the whole family in one place. Argument-shaped errors
also derive from ValueError.
"""

from __future__ import annotations


class PiForgeError(Exception):
    """Base class for all pi-forge errors."""


class PoleError(PiForgeError, ValueError):
    """Gamma evaluated at a non-positive integer."""


class DegenerateOrder(PiForgeError, ValueError):
    """A coefficient denominator such as (2ν+1)_j vanishes."""


class InvalidOrder(PiForgeError, ValueError):
    """The order ν is outside the admissible set for the operation."""


class DomainError(PiForgeError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class ZeroNormalization(PiForgeError, ValueError):
    """The weights of a combination sum to zero."""


class PrecisionExhausted(PiForgeError, ArithmeticError):
    """The requested accuracy cannot be certified at the given precision or term budget."""


class NonDecreasingTerms(PiForgeError, RuntimeError):
    """Series terms failed the monotone-decrease check in the alternating regime.

    This signals an implementation bug, not a user error.
    """


__all__ = [
    "DegenerateOrder",
    "DomainError",
    "InvalidOrder",
    "NonDecreasingTerms",
    "PiForgeError",
    "PoleError",
    "PrecisionExhausted",
    "ZeroNormalization",
]
