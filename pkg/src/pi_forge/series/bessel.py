"""
Scaled modified Bessel series and the Wronskian cross-check.

Both functions are handled in e^z-scaled form,

    F(z) = e^z K_ν(z) ≈ √(π/2) Σ_{n≤K} a_n(ν) z^(−n−1/2)
    G(z) = e^z I_ν(z) = z^ν / (2^ν Γ(ν+1)) · Σ_{j≤J} b_j(ν) z^j

and differentiated term by term. Since W{K_ν, I_ν} = 1/z,

    z · e^(−2z) · (F G′ − F′ G) − 1

measures how well the truncated series reproduce the pair. For
ν = m + 1/2 the K series terminates and the deviation falls to rounding
level as J grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import structlog

from pi_forge.arith.gamma import rgamma
from pi_forge.arith.precision import BigReal, PrecisionContext, default_context
from pi_forge.arith.rational import NuParam, RationalLike
from pi_forge.errors import DomainError, PrecisionExhausted
from pi_forge.models.reports import WronskianReport
from pi_forge.series.coefficients import HALF, a_coeff, a_stream, b_coeff, b_stream

logger = structlog.get_logger(__name__)

# Hard stop for the automatic ascending-series truncation.
_MAX_ASCENDING_TERMS = 1_000_000


@dataclass(frozen=True)
class _ScaledSums:
    """Partial sums behind one scaled Bessel evaluation."""

    value: BigReal
    derivative: BigReal
    plain: BigReal
    weighted: BigReal


def _positive_argument(z: BigReal | Fraction | int | str, ctx: PrecisionContext) -> BigReal:
    zv = ctx.real(z)
    if zv <= 0:
        raise DomainError(f"The Bessel series need z > 0, got z = {ctx.format(zv, 10)}")
    return zv


def _k_sums(nu: Fraction, z: BigReal, trunc_K: int, ctx: PrecisionContext) -> _ScaledSums:
    s0 = ctx.real(0)
    s1 = ctx.real(0)
    power = ctx.real(1)
    for n, a in enumerate(a_stream(nu).take(trunc_K + 1)):
        term = ctx.real(a) * power
        s0 += term
        s1 += term * (n + ctx.real(HALF))
        power /= z
    prefactor = ctx.mp.sqrt(ctx.pi() / 2) / ctx.mp.sqrt(z)
    return _ScaledSums(prefactor * s0, -prefactor * s1 / z, s0, s1)


def _i_sums(nu: Fraction, z: BigReal, trunc_I: int, ctx: PrecisionContext) -> _ScaledSums:
    s0 = ctx.real(0)
    s1 = ctx.real(0)
    power = ctx.real(1)
    for j, b in enumerate(b_stream(nu).take(trunc_I + 1)):
        term = ctx.real(b) * power
        s0 += term
        s1 += j * term
        power *= z
    s1 /= z
    nu_r = ctx.real(nu)
    prefactor = ctx.mp.power(z / 2, nu_r) * rgamma(nu + 1, ctx)
    return _ScaledSums(prefactor * s0, prefactor * (nu_r * s0 / z + s1), s0, nu_r * s0 / z + s1)


def bessel_k_scaled(
    nu: NuParam | RationalLike,
    z: BigReal | Fraction | int | str,
    trunc_K: int,
    ctx: PrecisionContext | None = None,
) -> tuple[BigReal, BigReal]:
    """e^z K_ν(z) and its derivative from the asymptotic series through n = trunc_K."""
    ctx = ctx or default_context()
    param = NuParam.of(nu).require_admissible()
    sums = _k_sums(param.value, _positive_argument(z, ctx), trunc_K, ctx)
    return sums.value, sums.derivative


def bessel_i_scaled(
    nu: NuParam | RationalLike,
    z: BigReal | Fraction | int | str,
    trunc_I: int,
    ctx: PrecisionContext | None = None,
) -> tuple[BigReal, BigReal]:
    """e^z I_ν(z) and its derivative from the ascending series through j = trunc_I."""
    ctx = ctx or default_context()
    param = NuParam.of(nu).require_admissible()
    sums = _i_sums(param.value, _positive_argument(z, ctx), trunc_I, ctx)
    return sums.value, sums.derivative


def optimal_trunc_K(nu: NuParam | RationalLike, z: BigReal | Fraction | int | str) -> int:
    """Last index to keep so that the first omitted a_n z^(−n) is the smallest.

    For ν = m + 1/2 this is m: every later coefficient vanishes.
    """
    param = NuParam.of(nu)
    m = param.half_integer_index
    if m is not None:
        return m
    v = param.value
    zf = float(Fraction(z)) if isinstance(z, (Fraction, int, str)) else float(z)
    if zf <= 0:
        raise DomainError(f"The Bessel series need z > 0, got z = {zf}")

    cap = int(4 * zf + 2 * abs(v)) + 10
    best_n, best_log, log_size = 0, 0.0, 0.0
    for n in range(cap):
        step = abs((v + HALF + n) * (v - HALF - n)) / (2 * (n + 1))
        log_size += math.log(float(step) / zf)
        if log_size < best_log:
            best_n, best_log = n + 1, log_size
        elif step >= zf and n >= abs(v):
            break
    return max(best_n - 1, 0)


def auto_trunc_I(
    nu: NuParam | RationalLike,
    z: BigReal | Fraction | int | str,
    ctx: PrecisionContext | None = None,
) -> int:
    """Smallest J > 2z whose term b_J z^J falls below 2^(−working_bits−10) of the sum."""
    ctx = ctx or default_context()
    param = NuParam.of(nu).require_admissible()
    zv = _positive_argument(z, ctx)
    threshold = ctx.mp.ldexp(1, -ctx.working_bits - 10)
    total = ctx.real(0)
    power = ctx.real(1)
    stream = b_stream(param.value)
    for j, b in enumerate(stream):
        term = ctx.real(b) * power
        total += term
        if j > 2 * zv and j + 2 * param.value + 2 > 0 and abs(term) < threshold * abs(total):
            return j
        if j >= _MAX_ASCENDING_TERMS:
            break
        power *= zv
    raise PrecisionExhausted(
        f"Ascending I series did not settle within {_MAX_ASCENDING_TERMS} terms"
    )


def _ascending_ratio_bound(
    nu: Fraction, z: BigReal, trunc_I: int, ctx: PrecisionContext
) -> BigReal:
    """Bound q on b_{j+1} z / b_j for every j ≥ trunc_I + 1, or +inf."""
    j = trunc_I + 1
    shifted, pole = j + nu + HALF, j + 2 * nu + 1
    if shifted <= 0 or pole <= 0:
        return ctx.mp.inf
    return 2 * z / (j + 1) * ctx.real(max(Fraction(1), shifted / pole))


def wronskian_check(
    nu: NuParam | RationalLike,
    z: BigReal | Fraction | int | str,
    trunc_K: int | None = None,
    trunc_I: int | None = None,
    ctx: PrecisionContext | None = None,
) -> WronskianReport:
    """Deviation of z·W{K_ν, I_ν} from 1 on the truncated scaled series.

    Args:
        nu: Order ν, outside {−1/2, −1, −3/2, ...}
        z: Argument z > 0
        trunc_K: Last asymptotic index kept (None: optimal truncation)
        trunc_I: Last ascending index kept (None: until negligible)
        ctx: Precision context

    The asymptotic part of the bound is infinite once the first omitted K
    term is as large as the truncated sum it would correct, as for large ν
    at small z.

    Returns:
        WronskianReport with the deviation and an estimated bound

    Raises:
        DomainError: If z ≤ 0
        InvalidOrder: If ν is excluded
    """
    ctx = ctx or default_context()
    param = NuParam.of(nu).require_admissible()
    v = param.value
    zv = _positive_argument(z, ctx)
    if trunc_K is None:
        trunc_K = optimal_trunc_K(param, zv)
    if trunc_I is None:
        trunc_I = auto_trunc_I(param, zv, ctx)
    if trunc_K < 0 or trunc_I < 0:
        raise ValueError(f"Truncation indices must be non-negative, got ({trunc_K}, {trunc_I})")

    k_sums = _k_sums(v, zv, trunc_K, ctx)
    i_sums = _i_sums(v, zv, trunc_I, ctx)

    scale = zv * ctx.mp.exp(-2 * zv)
    direct = scale * k_sums.value * i_sums.derivative
    cross = scale * k_sums.derivative * i_sums.value
    deviation = direct - cross - 1
    A, B = abs(direct), abs(cross)

    # K side: first omitted term, doubled. A and B come from the truncated
    # sums, so the relative errors are rescaled to the true ones.
    omitted = abs(ctx.real(a_coeff(v, trunc_K + 1))) * ctx.mp.power(zv, -(trunc_K + 1))
    rel_f = 2 * omitted / abs(k_sums.plain)
    rel_df = 2 * (trunc_K + ctx.real(Fraction(3, 2))) * omitted / abs(k_sums.weighted)
    worst = max(rel_f, rel_df)
    if worst >= 1:
        asymptotic_bound = ctx.mp.inf
    else:
        asymptotic_bound = (rel_f * A + rel_df * B) / (1 - worst)

    # I side: geometric tails of S and S′.
    q = _ascending_ratio_bound(v, zv, trunc_I, ctx)
    q_prime = q * (trunc_I + 2) / (trunc_I + 1)
    if q_prime >= 1:
        ascending_tail_bound = ctx.mp.inf
    else:
        first_out = abs(ctx.real(b_coeff(v, trunc_I + 1))) * ctx.mp.power(zv, trunc_I + 1)
        tail_s = first_out / (1 - q)
        tail_ds = first_out * (trunc_I + 1) / zv / (1 - q_prime)
        rel_g = tail_s / abs(i_sums.plain)
        rel_dg = (abs(ctx.real(v)) / zv * tail_s + tail_ds) / abs(i_sums.weighted)
        ascending_tail_bound = rel_dg * A + rel_g * B

    rounding_bound = (trunc_K + trunc_I + 8) * ctx.mp.ldexp(1, -ctx.working_bits + 4) * (A + B)

    logger.debug(
        "wronskian_checked",
        nu=str(v),
        z=ctx.format(zv, 10),
        trunc_K=trunc_K,
        trunc_I=trunc_I,
        deviation=ctx.format(deviation, 5),
    )

    return WronskianReport(
        nu=v,
        z=zv,
        deviation=deviation,
        trunc_K=trunc_K,
        trunc_I=trunc_I,
        asymptotic_bound=asymptotic_bound,
        ascending_tail_bound=ascending_tail_bound,
        rounding_bound=rounding_bound,
        precision_bits=ctx.precision_bits,
    )
