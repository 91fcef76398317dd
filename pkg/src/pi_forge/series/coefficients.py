"""
Coefficients of the modified Bessel expansions.

    e^z K_ν(z) ~ √(π/2) Σ a_n(ν) z^(−n−1/2)
    e^z I_ν(z) = (z/2)^ν / Γ(ν+1) · Σ b_j(ν) z^j

with

    a_n(ν) = (ν+1/2)_n ⟨ν−1/2⟩_n / (n! 2^n)
    b_j(ν) = 2^j (ν+1/2)_j / (j! (2ν+1)_j)

a_n(m+1/2) vanishes for n > m, which is what makes half-integer orders
terminate.
"""

from __future__ import annotations

import math
from fractions import Fraction

from pi_forge.arith.rational import (
    NuParam,
    RationalLike,
    falling_factorial,
    rising_factorial,
)
from pi_forge.errors import DegenerateOrder
from pi_forge.series.streams import TermStream

HALF = Fraction(1, 2)


def a_coeff(nu: NuParam | RationalLike, n: int) -> Fraction:
    """a_n(ν) from its factorial form."""
    v = NuParam.of(nu).value
    return (
        rising_factorial(v + HALF, n)
        * falling_factorial(v - HALF, n)
        / (math.factorial(n) * 2**n)
    )


def b_coeff(nu: NuParam | RationalLike, j: int) -> Fraction:
    """b_j(ν) from its factorial form.

    Raises:
        DegenerateOrder: If (2ν+1)_j vanishes
    """
    v = NuParam.of(nu).value
    denominator = rising_factorial(2 * v + 1, j)
    if denominator == 0:
        raise DegenerateOrder(f"b_{j}(ν) is undefined for ν = {v}: (2ν+1)_{j} = 0")
    return 2**j * rising_factorial(v + HALF, j) / (math.factorial(j) * denominator)


def a_ratio(nu: Fraction, n: int) -> Fraction:
    """a_{n+1}(ν) / a_n(ν)."""
    return (nu + HALF + n) * (nu - HALF - n) / (2 * (n + 1))


def b_ratio(nu: Fraction, j: int) -> Fraction:
    """b_{j+1}(ν) / b_j(ν).

    Raises:
        DegenerateOrder: If 2ν+1+j = 0
    """
    pole = 2 * nu + 1 + j
    if pole == 0:
        raise DegenerateOrder(f"b_{j + 1}(ν) is undefined for ν = {nu}: (2ν+1)_{j + 1} = 0")
    return 2 * (nu + HALF + j) / ((j + 1) * pole)


def a_stream(nu: NuParam | RationalLike) -> TermStream[Fraction]:
    """Exact stream of a_n(ν), n = 0, 1, ..."""
    v = NuParam.of(nu).value
    return TermStream(
        Fraction(1),
        lambda n: a_ratio(v, n),
        name=f"a(ν={v})",
        ratio_rule="(ν+1/2+n)(ν−1/2−n) / (2(n+1))",
        direct=lambda n: a_coeff(v, n),
    )


def b_stream(nu: NuParam | RationalLike) -> TermStream[Fraction]:
    """Exact stream of b_j(ν), j = 0, 1, ..."""
    v = NuParam.of(nu).value
    return TermStream(
        Fraction(1),
        lambda j: b_ratio(v, j),
        name=f"b(ν={v})",
        ratio_rule="2(ν+1/2+j) / ((j+1)(2ν+1+j))",
        direct=lambda j: b_coeff(v, j),
    )
