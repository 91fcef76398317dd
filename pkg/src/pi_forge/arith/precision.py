"""
Precision-controlled real arithmetic.

A PrecisionContext fixes the working precision for every floating operation
done on its behalf. Each context is backed by its own mpmath ``MPContext``
(one per thread), so evaluation never touches mpmath's global ``mp``
precision and two contexts can be used side by side.

Example:
    >>> from pi_forge.arith import PrecisionContext
    >>> ctx = PrecisionContext(precision_bits=128)
    >>> third = ctx.real(Fraction(1, 3))
    >>> print(ctx.format(ctx.sqrt_pi()))  # 38 significant digits
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import Any, TypeAlias

from mpmath import MPContext
from pydantic import BaseModel, ConfigDict, Field

# An mpmath mpf bound to a PrecisionContext's MPContext.
BigReal: TypeAlias = Any

_LOCAL = threading.local()


def _mp_for(bits: int) -> Any:
    """Return this thread's MPContext running at ``bits`` of precision."""
    cache: dict[int, Any] | None = getattr(_LOCAL, "contexts", None)
    if cache is None:
        cache = {}
        _LOCAL.contexts = cache
    mp = cache.get(bits)
    if mp is None:
        mp = MPContext()
        mp.prec = bits
        cache[bits] = mp
    return mp


def decimal_digits_for(bits: int) -> int:
    """Decimal digits that faithfully represent ``bits`` of binary precision."""
    return max(1, math.floor(bits * math.log10(2)))


def format_real(x: BigReal, precision_bits: int, digits: int | None = None) -> str:
    """Decimal string of x with the digits ``precision_bits`` supports."""
    mp = _mp_for(precision_bits)
    return str(mp.nstr(mp.mpf(x), digits or decimal_digits_for(precision_bits)))


class PrecisionContext(BaseModel):
    """Working precision for floating evaluation.

    Attributes:
        precision_bits: Target precision of reported values
        guard_bits: Extra bits carried internally

    Every operation under a context is correctly rounded to
    ``precision_bits + guard_bits``.
    """

    model_config = ConfigDict(frozen=True)

    precision_bits: int = Field(default=256, ge=16, description="Target precision in bits")
    guard_bits: int = Field(default=16, ge=0, description="Extra working bits")

    @property
    def working_bits(self) -> int:
        """Total bits every floating operation is rounded to."""
        return self.precision_bits + self.guard_bits

    @property
    def mp(self) -> Any:
        """The mpmath context for this precision (thread-local)."""
        return _mp_for(self.working_bits)

    @property
    def decimal_digits(self) -> int:
        """Decimal digits that faithfully represent ``precision_bits``."""
        return decimal_digits_for(self.precision_bits)

    @property
    def epsilon(self) -> BigReal:
        """2^-precision_bits as a BigReal."""
        return self.mp.ldexp(1, -self.precision_bits)

    def widened(self, extra_bits: int) -> PrecisionContext:
        """A context with ``extra_bits`` more target precision."""
        return PrecisionContext(
            precision_bits=self.precision_bits + extra_bits,
            guard_bits=self.guard_bits,
        )

    def real(self, x: Fraction | int | str | BigReal) -> BigReal:
        """Convert to a BigReal at working precision.

        Rationals go through a single correctly rounded division, so the
        conversion error is at most half an ulp.
        """
        if isinstance(x, Fraction):
            return self.mp.fdiv(x.numerator, x.denominator)
        if isinstance(x, int):
            return self.mp.mpf(x)
        if isinstance(x, str):
            value = Fraction(x.strip())
            return self.mp.fdiv(value.numerator, value.denominator)
        return self.mp.mpf(x)

    def pi(self) -> BigReal:
        """π at working precision."""
        return +self.mp.pi

    def sqrt_pi(self) -> BigReal:
        """√π at working precision."""
        return self.mp.sqrt(self.mp.pi)

    def exp(self, x: BigReal) -> BigReal:
        """exp(x) at working precision."""
        return self.mp.exp(self.real(x))

    def power(self, base: Fraction | int, exponent: Fraction | int) -> BigReal:
        """base**exponent for rational arguments, exact when the result is rational-integral."""
        exponent = Fraction(exponent)
        if exponent.denominator == 1:
            return self.real(Fraction(base) ** int(exponent))
        return self.mp.power(self.real(Fraction(base)), self.real(exponent))

    def ulp(self, x: BigReal) -> BigReal:
        """Unit in the last place of x at ``precision_bits``."""
        x = self.real(x)
        if x == 0:
            return self.epsilon
        exponent = int(self.mp.floor(self.mp.log(abs(x), 2)))
        return self.mp.ldexp(1, exponent - self.precision_bits + 1)

    def relative_error(self, value: BigReal, reference: BigReal) -> BigReal:
        """|value - reference| / |reference| (absolute error when reference is 0)."""
        value = self.real(value)
        reference = self.real(reference)
        diff = abs(value - reference)
        if reference == 0:
            return diff
        return diff / abs(reference)

    def format(self, x: BigReal, digits: int | None = None) -> str:
        """Decimal string of x at full target precision."""
        return str(self.mp.nstr(self.real(x), digits or self.decimal_digits))


def default_context() -> PrecisionContext:
    """The PrecisionContext built from the active settings."""
    from pi_forge.config import get_settings

    return get_settings().precision_context()
