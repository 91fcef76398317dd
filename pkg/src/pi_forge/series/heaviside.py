"""
Heaviside's exponential series.

    exp(t) ~ Σ_{k=−∞}^{∞} t^(k+δ) / Γ(k+1+δ)

The k ≥ 0 part converges for every t; the k < 0 part is only asymptotic
and is truncated at its smallest term. For integer δ the negative-index
terms with k+δ < 0 vanish (1/Γ has poles there) and the series is the
ordinary Taylor series of e^t.
"""

from __future__ import annotations

import math
from fractions import Fraction

import structlog

from pi_forge.arith.gamma import rgamma
from pi_forge.arith.precision import BigReal, PrecisionContext, default_context
from pi_forge.arith.rational import RationalLike, parse_rational
from pi_forge.errors import DomainError
from pi_forge.series.streams import TermStream

logger = structlog.get_logger(__name__)

# Upper bound on the tail search when t is huge.
_MAX_TAIL_SEARCH = 100_000


def heaviside_optimal_tail(t: BigReal | Fraction | int | str, delta: RationalLike) -> int:
    """Number of negative-index terms to keep for optimal truncation.

    Going from k to k−1 multiplies a tail term by (k+δ)/t, so the tail
    shrinks while |k+δ| < t and grows for good once k+δ < −t. The result
    is the index K of the smallest term t^(−K+δ)/Γ(−K+1+δ). For integer δ
    every non-vanishing tail term is kept, which is max(δ, 0) of them.
    """
    d = parse_rational(delta)
    if d.denominator == 1:
        return max(int(d), 0)

    tv = float(Fraction(t)) if isinstance(t, (Fraction, int, str)) else float(t)
    if tv <= 0:
        raise DomainError(f"Heaviside series needs t > 0, got t = {tv}")

    best_index, best_log, log_size = 0, 0.0, 0.0
    for k in range(0, -_MAX_TAIL_SEARCH, -1):
        log_size += math.log(abs(k + d) / tv)
        if log_size < best_log:
            best_index, best_log = -k + 1, log_size
        elif k - 1 + d < 0 and abs(k - 1 + d) >= tv:
            break
    return best_index


def heaviside_exp(
    t: BigReal | Fraction | int | str,
    delta: RationalLike,
    K_pos: int,
    K_neg: int | None = None,
    ctx: PrecisionContext | None = None,
) -> BigReal:
    """Σ_{k=−K_neg}^{K_pos} t^(k+δ) / Γ(k+1+δ).

    Args:
        t: Argument, t > 0
        delta: Index shift δ
        K_pos: Last non-negative index kept
        K_neg: Negative-index terms kept; None picks the optimal truncation
        ctx: Precision context

    Returns:
        The truncated series as a BigReal

    Raises:
        DomainError: If t ≤ 0
    """
    ctx = ctx or default_context()
    d = parse_rational(delta)
    tv = ctx.real(t)
    if tv <= 0:
        raise DomainError(f"Heaviside series needs t > 0, got t = {ctx.format(tv, 10)}")
    if K_pos < 0:
        raise ValueError(f"K_pos must be non-negative, got {K_pos}")
    if K_neg is None:
        K_neg = heaviside_optimal_tail(tv, d)
    if K_neg < 0:
        raise ValueError(f"K_neg must be non-negative, got {K_neg}")

    if d.denominator == 1:
        total = _taylor_partial_sum(tv, max(0, int(d) - K_neg), K_pos + int(d), ctx)
    else:
        first = ctx.mp.power(tv, ctx.real(d)) * rgamma(1 + d, ctx)
        upward: TermStream[BigReal] = TermStream(
            first,
            lambda k: tv / (k + 1 + ctx.real(d)),
            name="heaviside_entire",
            ratio_rule="t / (k+1+δ)",
        )
        downward: TermStream[BigReal] = TermStream(
            first,
            lambda i: (ctx.real(d) - i) / tv,
            name="heaviside_tail",
            ratio_rule="(k+δ) / t for k = −i",
        )
        total = ctx.mp.fsum(upward.take(K_pos + 1))
        next(downward)
        total += ctx.mp.fsum(downward.take(K_neg))

    logger.debug("heaviside_summed", delta=str(d), K_pos=K_pos, K_neg=K_neg)
    return total


def _taylor_partial_sum(t: BigReal, first: int, last: int, ctx: PrecisionContext) -> BigReal:
    """Σ_{j=first}^{last} t^j / j!."""
    if last < first:
        return ctx.real(0)
    term = ctx.mp.power(t, first) / ctx.mp.factorial(first)
    stream: TermStream[BigReal] = TermStream(
        term,
        lambda i: t / (first + i + 1),
        name="taylor",
        ratio_rule="t / (j+1)",
    )
    return ctx.mp.fsum(stream.take(last - first + 1))
