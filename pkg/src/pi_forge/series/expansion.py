"""
Formal expansion of Γ(ν+1)/Γ(ν+k+1/2).

    Γ(ν+1) / Γ(ν+k+1/2) ~ √π / 2^(2ν) · Σ_n T_n(ν, k)
    T_n(ν, k) = a_n(ν) b_{n+k}(ν) (k+2n+ν+1/2) / 2^k

The products a_n b_{n+k} (k+2n+ν+1/2) summed over n are the coefficients
c_k(ν) of the matching relation, and for half-integer ν they obey the
two-term recurrence (k+ν−1/2) c_k = 2 c_{k−1}.

For ν = m + 1/2 the sum stops at n = m and the expansion is an identity;
otherwise the diagnostics locate the optimal truncation point and report
the error against the gamma oracle.
"""

from __future__ import annotations

from fractions import Fraction

import structlog

from pi_forge.arith.gamma import gamma
from pi_forge.arith.precision import BigReal, PrecisionContext, default_context
from pi_forge.arith.rational import NuParam, RationalLike
from pi_forge.config import get_settings
from pi_forge.errors import InvalidOrder
from pi_forge.models.reports import FormalExpansionDiagnostics
from pi_forge.series.coefficients import HALF, a_coeff, a_ratio, b_coeff, b_ratio
from pi_forge.series.streams import TermStream

logger = structlog.get_logger(__name__)


def c_coeff_partial(nu: NuParam | RationalLike, k: int, N: int) -> Fraction:
    """Σ_{n=max(0,−k)}^{N} a_n(ν) b_{n+k}(ν) (k+2n+ν+1/2), exactly.

    Terms with n+k < 0 are skipped.

    Raises:
        DegenerateOrder: Propagated from b_coeff
    """
    if N < 0:
        raise ValueError(f"N must be non-negative, got {N}")
    v = NuParam.of(nu).value
    total = Fraction(0)
    for n in range(max(0, -k), N + 1):
        a = a_coeff(v, n)
        if a == 0:
            continue
        total += a * b_coeff(v, n + k) * (k + 2 * n + v + HALF)
    return total


def c_coeff_exact(nu: NuParam | RationalLike, k: int) -> Fraction:
    """Complete c_k(ν) for half-integer ν = m + 1/2 (a finite sum).

    Raises:
        InvalidOrder: If ν is not a positive half-integer
    """
    param = NuParam.of(nu)
    m = param.half_integer_index
    if m is None:
        raise InvalidOrder(f"c_k(ν) is a finite sum only for ν = m + 1/2, got ν = {param}")
    return c_coeff_partial(param, k, m)


def recurrence_residual(nu: NuParam | RationalLike, k_max: int) -> list[Fraction]:
    """Residuals (k+ν−1/2) c_k(ν) − 2 c_{k−1}(ν) for k = 1..k_max.

    Every residual is zero when the recurrence holds.

    Raises:
        InvalidOrder: If ν is not a positive half-integer
    """
    param = NuParam.of(nu)
    if param.half_integer_index is None:
        raise InvalidOrder(f"The c_k recurrence is checked for ν = m + 1/2 only, got ν = {param}")
    v = param.value
    previous = c_coeff_exact(param, 0)
    residuals = []
    for k in range(1, k_max + 1):
        current = c_coeff_exact(param, k)
        residuals.append((k + v - HALF) * current - 2 * previous)
        previous = current
    return residuals


def expansion_term(nu: NuParam | RationalLike, k: int, n: int) -> Fraction:
    """T_n(ν, k) from the coefficient closed forms."""
    v = NuParam.of(nu).value
    return a_coeff(v, n) * b_coeff(v, n + k) * (k + 2 * n + v + HALF) / 2**k


def expansion_stream(nu: NuParam | RationalLike, k: int) -> TermStream[Fraction]:
    """Exact stream of T_n(ν, k), n = 0, 1, ...

    Raises:
        InvalidOrder: If ν is excluded
    """
    param = NuParam.of(nu).require_admissible()
    v = param.value
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")

    def ratio(n: int) -> Fraction:
        return (
            a_ratio(v, n)
            * b_ratio(v, n + k)
            * (k + 2 * n + 2 + v + HALF)
            / (k + 2 * n + v + HALF)
        )

    return TermStream(
        expansion_term(v, k, 0),
        ratio,
        name=f"T(ν={v}, k={k})",
        ratio_rule="a_{n+1}/a_n · b_{n+k+1}/b_{n+k} · (k+2n+ν+5/2)/(k+2n+ν+1/2)",
        direct=lambda n: expansion_term(v, k, n),
    )


def gamma_quotient_expansion(
    nu: NuParam | RationalLike,
    k: int,
    max_terms: int | None = None,
    ctx: PrecisionContext | None = None,
) -> FormalExpansionDiagnostics:
    """Partial sums of the expansion against Γ(ν+1)/Γ(ν+k+1/2).

    When the term magnitudes still fall at the last generated term,
    ``min_term_index`` is that last term and ``minimum_reached`` is False;
    more terms may do better. For k + ν + 1/2 > 0 the magnitudes end up
    decaying like n^−(k+ν+1/2), so this is the usual outcome there.

    Args:
        nu: Order ν, outside {−1/2, −1, −3/2, ...}
        k: Expansion index k ≥ 0
        max_terms: Terms to generate (default from settings); a terminating
            expansion stops at n = m
        ctx: Precision context

    Returns:
        FormalExpansionDiagnostics

    Raises:
        InvalidOrder: If ν is excluded
    """
    param = NuParam.of(nu).require_admissible()
    ctx = ctx or default_context()
    if max_terms is None:
        max_terms = get_settings().evaluation.expansion_terms
    if max_terms < 1:
        raise ValueError(f"max_terms must be positive, got {max_terms}")

    v = param.value
    m = param.half_integer_index
    count = max_terms if m is None else min(max_terms, m + 1)

    scale = ctx.sqrt_pi() / ctx.power(2, 2 * v)
    stream = expansion_stream(param, k)
    partial_sums: list[BigReal] = []
    magnitudes: list[BigReal] = []
    total = ctx.real(0)
    for term in stream.take(count):
        scaled = scale * ctx.real(term)
        total += scaled
        partial_sums.append(total)
        magnitudes.append(abs(scaled))

    complete = m is not None and len(partial_sums) == m + 1
    if complete:
        min_index = len(partial_sums) - 1
    else:
        min_index = min(range(len(magnitudes)), key=magnitudes.__getitem__)
    # A minimum on the last generated term may still be falling.
    reached = complete or min_index < len(magnitudes) - 1

    reference = gamma(v + 1, ctx) / gamma(v + k + HALF, ctx)
    error = ctx.relative_error(partial_sums[min_index], reference)

    logger.debug(
        "expansion_diagnosed",
        nu=str(v),
        k=k,
        terms=len(partial_sums),
        min_term_index=min_index,
        minimum_reached=reached,
        best_relative_error=ctx.format(error, 5),
    )

    return FormalExpansionDiagnostics(
        nu=v,
        k=k,
        partial_sums=partial_sums,
        term_magnitudes=magnitudes,
        min_term_index=min_index,
        minimum_reached=reached,
        best_relative_error=error,
        reference_value=reference,
        terminating=complete,
        precision_bits=ctx.precision_bits,
    )
