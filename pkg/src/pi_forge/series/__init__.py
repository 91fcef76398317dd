"""
Coefficient streams, the formal gamma-quotient expansion, Heaviside's
exponential series and the Bessel Wronskian check.

Example:
    >>> from pi_forge.series import c_coeff_exact, recurrence_residual
    >>>
    >>> set(recurrence_residual("5/2", 25))
    {Fraction(0, 1)}
    >>> c_coeff_exact("1/2", 2)
    Fraction(2, 1)
"""

from pi_forge.series.bessel import (
    auto_trunc_I,
    bessel_i_scaled,
    bessel_k_scaled,
    optimal_trunc_K,
    wronskian_check,
)
from pi_forge.series.coefficients import a_coeff, a_stream, b_coeff, b_stream
from pi_forge.series.expansion import (
    c_coeff_exact,
    c_coeff_partial,
    expansion_stream,
    expansion_term,
    gamma_quotient_expansion,
    recurrence_residual,
)
from pi_forge.series.heaviside import heaviside_exp, heaviside_optimal_tail
from pi_forge.series.streams import TermStream

__all__ = [
    "TermStream",
    "a_coeff",
    "a_stream",
    "auto_trunc_I",
    "b_coeff",
    "b_stream",
    "bessel_i_scaled",
    "bessel_k_scaled",
    "c_coeff_exact",
    "c_coeff_partial",
    "expansion_stream",
    "expansion_term",
    "gamma_quotient_expansion",
    "heaviside_exp",
    "heaviside_optimal_tail",
    "optimal_trunc_K",
    "recurrence_residual",
    "wronskian_check",
]
