"""
Certified evaluation of the 1/π family and of normalized combinations.

Example:
    >>> from pi_forge.arith import PrecisionContext
    >>> from pi_forge.family import FamilyParams, eval_family
    >>>
    >>> ctx = PrecisionContext(precision_bits=128)
    >>> report = eval_family(FamilyParams(m=0, k=2), "1e-12", ctx)
    >>> report.converged, report.method
    (True, 'averaged')
"""

from __future__ import annotations

import math
from fractions import Fraction

import structlog

from pi_forge.arith.precision import BigReal, PrecisionContext, default_context
from pi_forge.arith.rational import parse_rational
from pi_forge.config import get_settings
from pi_forge.errors import PrecisionExhausted
from pi_forge.family.summation import averaged_sum
from pi_forge.family.terms import (
    CombinationSpec,
    FamilyParams,
    family_stream,
    tail_completely_monotone,
)
from pi_forge.models.reports import ComplexEvaluationReport, EvaluationReport

logger = structlog.get_logger(__name__)

# First window length tried; doubled until the target is met.
INITIAL_WINDOW = 32

# Extra bits on top of log2(1/target) for the averaging arithmetic.
AVERAGING_GUARD_BITS = 32

TargetLike = BigReal | Fraction | int | str | float


def _target(value: TargetLike | None, ctx: PrecisionContext) -> BigReal:
    if value is None:
        value = get_settings().evaluation.target_rel_err
    if isinstance(value, float):
        value = repr(value)
    if isinstance(value, (Fraction, int, str)):
        return ctx.real(parse_rational(value))
    return ctx.real(value)


def _check_target(target: BigReal, ctx: PrecisionContext) -> None:
    floor = ctx.mp.ldexp(1, -ctx.precision_bits + 16)
    if target <= 0:
        raise ValueError("target_rel_err must be positive")
    if target <= floor:
        raise PrecisionExhausted(
            f"target_rel_err {ctx.format(target, 5)} needs more than {ctx.precision_bits} bits; "
            f"raise --prec-bits or relax the target (floor is 2^-{ctx.precision_bits - 16})"
        )


def _averaging_context(target: BigReal, ctx: PrecisionContext) -> PrecisionContext:
    return ctx.widened(math.ceil(-float(ctx.mp.log(target, 2))) + AVERAGING_GUARD_BITS)


def eval_family(
    params: FamilyParams,
    target_rel_err: TargetLike | None = None,
    ctx: PrecisionContext | None = None,
    *,
    max_terms: int | None = None,
    raise_on_failure: bool = True,
) -> EvaluationReport:
    """Sum one 1/π series to a relative error target.

    Terms alternate and decrease from n = m + 1 on. A window of L averaged
    partial sums is placed at s = m + 1 + L, clear of the first terms, and
    L doubles until the bound satisfies bound ≤ target_rel_err · |value|.

    The report is ``certified`` when the bound is a proof: always at level 0,
    and at higher levels when :func:`tail_completely_monotone` holds. For
    m ≥ 1 with k < m an averaged bound is an estimate checked on the window
    only.

    Args:
        params: Series indices (m, k)
        target_rel_err: Relative error target (default from settings)
        ctx: Precision context
        max_terms: Cap on exact terms (default from settings)
        raise_on_failure: Raise instead of returning an unconverged report

    Returns:
        EvaluationReport

    Raises:
        PrecisionExhausted: If the target is below what the precision
            supports or the term cap is reached first
        NonDecreasingTerms: If the exact terms break the alternating
            hypotheses (an internal error)
    """
    ctx = ctx or default_context()
    target = _target(target_rel_err, ctx)
    _check_target(target, ctx)
    if max_terms is None:
        max_terms = get_settings().evaluation.max_terms

    averaging_ctx = _averaging_context(target, ctx)
    tail_proven = tail_completely_monotone(params)
    stream = family_stream(params)
    terms: list[Fraction] = []
    window = INITIAL_WINDOW

    while True:
        start = params.m + 1 + min(window, (max_terms - params.m - 1) // 2)
        count = min(start + window + 1, max_terms)
        if count - start - 1 < 2:
            raise PrecisionExhausted(
                f"max_terms = {max_terms} leaves no window after n = {params.m}"
            )
        terms.extend(stream.take(count - len(terms)))
        best = averaged_sum(terms, start, averaging_ctx)
        if best.bound <= target * abs(best.value):
            converged = True
            break
        if count >= max_terms:
            converged = False
            break
        window *= 2

    value = ctx.real(best.value)
    slack = len(terms) * ctx.mp.ldexp(1, -ctx.working_bits + 2) * ctx.real(best.max_abs_partial)
    report = EvaluationReport(
        value=value,
        remainder_bound=ctx.real(best.bound),
        terms_used=len(terms),
        precision_bits=ctx.precision_bits,
        working_bits=ctx.working_bits,
        converged=converged,
        rounding_slack=slack,
        method="averaged" if best.level > 0 else "leibniz",
        acceleration_level=best.level,
        certified=best.level == 0 or tail_proven,
    )

    logger.info(
        "family_evaluated",
        m=params.m,
        k=params.k,
        terms_used=report.terms_used,
        level=report.acceleration_level,
        converged=converged,
        certified=report.certified,
    )

    if not converged and raise_on_failure:
        raise PrecisionExhausted(
            f"Could not certify relative error {ctx.format(target, 5)} for "
            f"(m={params.m}, k={params.k}) within {max_terms} terms; "
            f"best bound {ctx.format(report.remainder_bound, 5)}"
        )
    return report


def eval_combination(
    spec: CombinationSpec,
    target_rel_err: TargetLike | None = None,
    ctx: PrecisionContext | None = None,
    *,
    max_terms: int | None = None,
    raise_on_failure: bool = True,
) -> ComplexEvaluationReport:
    """Sum Σ (−1)^n [(1/2)_n/n!]^3 g(n) with g(n) = Σ α_k f_k(n) / Σ α_k.

    Each f_k series is the m = 0 member of the family and is certified on
    its own, to target_rel_err / Σ|w_k| with w_k = α_k / Σα; the results are
    combined with the exact normalized weights.

    Raises:
        ZeroNormalization: If Σ α_k = 0
        PrecisionExhausted: As for eval_family
    """
    ctx = ctx or default_context()
    weights = spec.normalized()
    target = _target(target_rel_err, ctx)
    _check_target(target, ctx)

    magnitudes = {
        k: ctx.mp.sqrt(ctx.real(re * re + im * im)) for k, (re, im) in weights.items()
    }
    weight_sum = ctx.mp.fsum(magnitudes.values())
    per_k_target = target / weight_sum

    components: dict[int, EvaluationReport] = {}
    for k in sorted(weights):
        components[k] = eval_family(
            FamilyParams(m=0, k=k),
            per_k_target,
            ctx,
            max_terms=max_terms,
            raise_on_failure=raise_on_failure,
        )

    value_re = ctx.mp.fsum(ctx.real(weights[k][0]) * r.value for k, r in components.items())
    value_im = ctx.mp.fsum(ctx.real(weights[k][1]) * r.value for k, r in components.items())
    bound = ctx.mp.fsum(magnitudes[k] * r.remainder_bound for k, r in components.items())
    slack = ctx.mp.fsum(magnitudes[k] * r.rounding_slack for k, r in components.items())
    slack += len(components) * ctx.mp.ldexp(1, -ctx.working_bits + 2) * weight_sum

    report = ComplexEvaluationReport(
        value_re=value_re,
        value_im=value_im,
        remainder_bound=bound,
        terms_used=sum(r.terms_used for r in components.values()),
        precision_bits=ctx.precision_bits,
        working_bits=ctx.working_bits,
        converged=all(r.converged for r in components.values()),
        certified=all(r.certified for r in components.values()),
        rounding_slack=slack,
        components=components,
    )
    logger.info(
        "combination_evaluated",
        weights=str(spec),
        terms_used=report.terms_used,
        converged=report.converged,
    )
    return report
