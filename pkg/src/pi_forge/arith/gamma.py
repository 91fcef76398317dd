"""
Gamma function at arbitrary precision.

The evaluator is Spouge's approximation, used as an independent oracle for
the gamma quotients the series expansions reproduce. The Spouge parameter is
tied to the requested precision:

    a = ceil(precision_bits * ln 2 / ln(2π)) + 2

which bounds the relative truncation error by a^(-1/2) (2π)^(-(a+1/2)),
below 2^-precision_bits. Arguments below 1 are moved up with
Γ(x) = Γ(x+n) / (x)_n before the approximation is applied.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import structlog

from pi_forge.arith.precision import BigReal, PrecisionContext, _mp_for
from pi_forge.arith.rational import rising_factorial
from pi_forge.errors import PoleError

logger = structlog.get_logger(__name__)

# Spouge's coefficients alternate and grow like e^(1.28 a); the sum keeps
# about e^a of it, so this many extra bits absorb the cancellation.
_CANCELLATION_BITS_PER_A = 1


def spouge_parameter(precision_bits: int) -> int:
    """Spouge parameter a for a target precision in bits."""
    return math.ceil(precision_bits * math.log(2) / math.log(2 * math.pi)) + 2


@lru_cache(maxsize=16)
def _spouge_coefficients(a: int, bits: int) -> tuple[tuple[int, int, int, int], ...]:
    """Raw mpf tuples of c_0, c_1, ..., c_{a-1} at ``bits`` of precision."""
    mp = _mp_for(bits)
    coeffs = [mp.sqrt(2 * mp.pi)]
    factorial = mp.mpf(1)
    for k in range(1, a):
        if k > 1:
            factorial *= k - 1
        c = mp.power(a - k, k - mp.mpf(0.5)) * mp.exp(a - k) / factorial
        coeffs.append(c if k % 2 == 1 else -c)
    logger.debug("spouge_coefficients_built", a=a, bits=bits)
    return tuple(c._mpf_ for c in coeffs)


def _spouge(z: BigReal, a: int, bits: int) -> BigReal:
    """Γ(z+1) for z ≥ 0, evaluated at ``bits`` of precision."""
    mp = _mp_for(bits)
    z = mp.mpf(z)
    coeffs = [mp.make_mpf(t) for t in _spouge_coefficients(a, bits)]
    total = coeffs[0]
    for k in range(1, a):
        total += coeffs[k] / (z + k)
    base = z + a
    return mp.power(base, z + mp.mpf(0.5)) * mp.exp(-base) * total


def _is_pole(x: Fraction | BigReal, ctx: PrecisionContext) -> bool:
    if isinstance(x, Fraction):
        return x.denominator == 1 and x <= 0
    return bool(ctx.mp.isint(x)) and x <= 0


def gamma(x: Fraction | int | BigReal, ctx: PrecisionContext) -> BigReal:
    """Γ(x) at the context's working precision.

    Args:
        x: Argument; exact rationals keep the argument shift exact
        ctx: Precision context

    Returns:
        Γ(x) as a BigReal

    Raises:
        PoleError: If x is a non-positive integer
    """
    if isinstance(x, int):
        x = Fraction(x)
    if _is_pole(x, ctx):
        raise PoleError(f"Γ has a pole at x = {x}")

    a = spouge_parameter(ctx.working_bits)
    bits = ctx.working_bits + _CANCELLATION_BITS_PER_A * a + 16
    inner = _mp_for(bits)

    if isinstance(x, Fraction):
        shift = max(0, math.ceil(1 - x))
        divisor = inner.fdiv(*_ratio(rising_factorial(x, shift)))
        y = inner.fdiv((x + shift).numerator, (x + shift).denominator)
    else:
        xv = inner.mpf(x)
        shift = max(0, int(inner.ceil(1 - xv)))
        divisor = inner.mpf(1)
        for i in range(shift):
            divisor *= xv + i
        y = xv + shift

    result = _spouge(y - 1, a, bits) / divisor
    return ctx.mp.mpf(result)


def rgamma(x: Fraction | int | BigReal, ctx: PrecisionContext) -> BigReal:
    """1/Γ(x), which is zero at the poles of Γ."""
    if isinstance(x, int):
        x = Fraction(x)
    if _is_pole(x, ctx):
        return ctx.mp.mpf(0)
    return 1 / gamma(x, ctx)


def _ratio(value: Fraction) -> tuple[int, int]:
    return value.numerator, value.denominator


def gamma_quotient_exact(m: int, k: int) -> Fraction:
    """Rational q with Γ(m+1) / Γ(m+k+1/2) = q · π^(-1/2).

    Uses Γ(m+k+1/2) = (1/2)_{m+k} √π, so q = m! / (1/2)_{m+k}.
    """
    if m < 0 or k < 0:
        raise ValueError(f"gamma_quotient_exact needs m, k >= 0, got ({m}, {k})")
    return Fraction(math.factorial(m)) / rising_factorial(Fraction(1, 2), m + k)
