"""
Summation of alternating series by repeated averaging.

The 1/π series converge only algebraically (|term_n| ~ n^−(k+m+1/2)), so
truncating at the first term below the target would need far too many
terms. Averaging neighbouring partial sums (Euler–van Wijngaarden) turns
a window of L alternating terms into a much better estimate:

    P_0[i] = S_{s+i}                   D_0[i] = t_{s+i+1}
    P_j[i] = (P_{j−1}[i] + P_{j−1}[i+1]) / 2
    D_j[i] = (D_{j−1}[i] + D_{j−1}[i+1]) / 2 = P_j[i+1] − P_j[i]

If D_j alternates in sign and decreases in magnitude over the whole tail,
the limit lies between consecutive P_j, so |S − P_j[last]| ≤ |D_j[last]|.
Level 0 is the plain alternating-series bound. Here a level is accepted
only if its differences pass that test across the computed window; the
first rejected level ends the search. Whether the test also holds past the
window is a property of the series, see
:func:`pi_forge.family.terms.tail_completely_monotone`.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

import structlog

from pi_forge.arith.precision import BigReal, PrecisionContext
from pi_forge.errors import NonDecreasingTerms

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class AveragedSum:
    """Best accepted estimate over one window.

    Attributes:
        value: P_j[last] for the chosen level j
        bound: |D_j[last]|
        level: Averaging level j (0 = plain partial sum)
        max_abs_partial: Largest |S_n| met, for the rounding allowance
    """

    value: BigReal
    bound: BigReal
    level: int
    max_abs_partial: BigReal


def leibniz_violations(terms: Sequence[Fraction], start: int) -> list[int]:
    """Indices n ≥ start with term_{n+1} not alternating or not smaller, exactly."""
    bad = []
    for n in range(start, len(terms) - 1):
        a, b = terms[n], terms[n + 1]
        if not ((a > 0 > b or a < 0 < b) and abs(b) < abs(a)):
            bad.append(n)
    return bad


def _alternates_and_shrinks(diffs: list[BigReal]) -> bool:
    """True if diffs alternate in sign and strictly decrease in magnitude."""
    for a, b in zip(diffs, diffs[1:], strict=False):
        if not ((a > 0 > b or a < 0 < b) and abs(b) < abs(a)):
            return False
    return len(diffs) >= 2


def averaged_sum(
    terms: Sequence[Fraction], start: int, ctx: PrecisionContext
) -> AveragedSum:
    """Best accepted averaged partial sum over the window after ``start``.

    Args:
        terms: Exact terms t_0 .. t_{start+L}; the series must alternate and
            decrease from index ``start + 1`` on
        start: Window start s (partial sums S_s .. S_{s+L−1})
        ctx: Precision of the averaging, usually widened past the target

    Returns:
        AveragedSum with the smallest accepted bound

    Raises:
        NonDecreasingTerms: If the exact terms themselves fail the
            alternating-series test inside the window
    """
    window = len(terms) - start - 1
    if window < 2:
        raise ValueError(f"Need at least two window terms after index {start}, got {window}")

    violations = leibniz_violations(terms, start + 1)
    if violations:
        raise NonDecreasingTerms(
            f"Terms stop alternating or decreasing at n = {violations[0]}"
            f" (window starts at {start})"
        )

    mp = ctx.mp
    values = [ctx.real(t) for t in terms]

    total = mp.mpf(0)
    max_abs = mp.mpf(0)
    for v in values[:start]:
        total += v
        max_abs = max(max_abs, abs(total))
    partials = []
    for v in values[start : start + window]:
        total += v
        partials.append(total)
        max_abs = max(max_abs, abs(total))
    diffs = values[start + 1 : start + 1 + window]

    best = AveragedSum(partials[-1], abs(diffs[-1]), 0, max_abs)
    for level in range(1, window - 1):
        partials = [(a + b) / 2 for a, b in zip(partials, partials[1:], strict=False)]
        diffs = [(a + b) / 2 for a, b in zip(diffs, diffs[1:], strict=False)]
        if not _alternates_and_shrinks(diffs):
            logger.debug("acceleration_level_rejected", level=level, window=window)
            break
        bound = abs(diffs[-1])
        if bound < best.bound:
            best = AveragedSum(partials[-1], bound, level, max_abs)
    return best
