"""
Exact rational kernels and precision-controlled real arithmetic.

Example:
    >>> from fractions import Fraction
    >>> from pi_forge.arith import PrecisionContext, gamma, rising_factorial
    >>>
    >>> rising_factorial(Fraction(1, 2), 3)
    Fraction(15, 8)
    >>> ctx = PrecisionContext(precision_bits=128)
    >>> value = gamma(Fraction(7, 2), ctx)
"""

from pi_forge.arith.gamma import gamma, gamma_quotient_exact, rgamma, spouge_parameter
from pi_forge.arith.precision import BigReal, PrecisionContext, default_context
from pi_forge.arith.rational import (
    NuParam,
    Rational,
    RationalLike,
    binomial,
    falling_factorial,
    parse_rational,
    rising_factorial,
)

__all__ = [
    "BigReal",
    "NuParam",
    "PrecisionContext",
    "Rational",
    "RationalLike",
    "binomial",
    "default_context",
    "falling_factorial",
    "gamma",
    "gamma_quotient_exact",
    "parse_rational",
    "rgamma",
    "rising_factorial",
    "spouge_parameter",
]
