"""
Exact rational kernels.

Rationals are plain ``fractions.Fraction`` values: always reduced, with a
positive denominator, and closed under exact arithmetic. This module adds the
factorial kernels every other module is built on, plus the order parameter ν.

Example:
    >>> from pi_forge.arith import rising_factorial, falling_factorial, NuParam
    >>> rising_factorial(Fraction(1, 2), 2)
    Fraction(3, 4)
    >>> falling_factorial(Fraction(-1, 2), 2)
    Fraction(3, 4)
    >>> NuParam(value="3/2").half_integer_index
    1
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator

from pi_forge.errors import InvalidOrder

Rational = Fraction
RationalLike = Fraction | int | str


def parse_rational(text: RationalLike) -> Fraction:
    """Parse an exact rational.

    Accepts ``Fraction``, ``int``, or a string holding ``p/q``, an integer or a
    finite decimal (``"-3/2"``, ``"7"``, ``"0.25"``, ``"1e-3"``). Floats are
    rejected: a binary float is never what the caller meant by "1/3".

    Args:
        text: Value to parse

    Returns:
        Reduced Fraction

    Raises:
        ValueError: If the value is not an exact rational
    """
    if isinstance(text, bool):
        raise ValueError(f"Not a rational: {text!r}")
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        stripped = text.strip()
        try:
            return Fraction(stripped)
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"Not a rational: {text!r}") from e
    raise ValueError(f"Not a rational: {text!r} (type {type(text).__name__})")


def _check_count(n: int) -> None:
    if n < 0:
        raise ValueError(f"Factorial length must be non-negative, got {n}")


def rising_factorial(x: RationalLike, n: int) -> Fraction:
    """Rising factorial (x)_n = x(x+1)...(x+n-1), with (x)_0 = 1.

    For x = p/q the product is formed over the integers p, p+q, p+2q, ...
    and divided by q^n once.
    """
    _check_count(n)
    x = parse_rational(x)
    p, q = x.numerator, x.denominator
    return Fraction(math.prod(range(p, p + n * q, q)), q**n)


def falling_factorial(x: RationalLike, n: int) -> Fraction:
    """Falling factorial <x>_n = x(x-1)...(x-n+1), with <x>_0 = 1."""
    _check_count(n)
    x = parse_rational(x)
    p, q = x.numerator, x.denominator
    return Fraction(math.prod(range(p, p - n * q, -q)), q**n)


def binomial(n: int, k: int) -> Fraction:
    """Binomial coefficient C(n, k) as a Rational; zero when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial needs non-negative arguments, got ({n}, {k})")
    return Fraction(math.comb(n, k))


class NuParam(BaseModel):
    """The order ν of the Bessel functions, held as an exact rational.

    Integer ν = m gives the 1/π family, half-integer ν = m + 1/2 the
    terminating expansions behind the binomial identity.

    Attributes:
        value: ν as a reduced Fraction

    Example:
        >>> nu = NuParam(value="1/4")
        >>> nu.is_half_integer
        False
        >>> NuParam(value="-1").is_excluded
        True
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction = Field(..., description="Order ν as an exact rational")

    @field_validator("value", mode="before")
    @classmethod
    def parse_value(cls, v: Any) -> Fraction:
        """Accept "p/q" strings, ints and Fractions."""
        return parse_rational(v)

    @classmethod
    def of(cls, value: RationalLike | NuParam) -> NuParam:
        """Coerce a rational-like value (or an existing NuParam)."""
        if isinstance(value, NuParam):
            return value
        return cls(value=parse_rational(value))

    @property
    def is_excluded(self) -> bool:
        """True for ν ∈ {−1/2, −1, −3/2, −2, …}, i.e. 2ν a negative integer."""
        twice = 2 * self.value
        return twice.denominator == 1 and twice < 0

    @property
    def is_half_integer(self) -> bool:
        """True for ν = m + 1/2 with m ≥ 0."""
        return self.value.denominator == 2 and self.value > 0

    @property
    def half_integer_index(self) -> int | None:
        """m such that ν = m + 1/2, or None when ν is not of that form."""
        if not self.is_half_integer:
            return None
        return int(self.value - Fraction(1, 2))

    def require_admissible(self) -> NuParam:
        """Raise InvalidOrder unless ν is outside {−1/2, −1, −3/2, …}."""
        if self.is_excluded:
            raise InvalidOrder(
                f"ν = {self.value} is excluded: the expansion needs "
                "ν ∉ {-1/2, -1, -3/2, -2, ...}"
            )
        return self

    def __str__(self) -> str:
        return str(self.value)
