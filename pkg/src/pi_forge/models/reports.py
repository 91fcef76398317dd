"""
Evaluation and diagnostic reports.

This module defines the results handed back by the numerical operations:
- EvaluationReport: sum of one 1/π series with its remainder bound
- ComplexEvaluationReport: sum of a weighted combination
- FormalExpansionDiagnostics: optimal-truncation study of the gamma-quotient expansion
- WronskianReport: deviation of z·W{K_ν, I_ν} from 1

High-precision values are mpmath numbers carried as-is; ``to_record()``
turns a report into the flat string/int/bool payload used for output.

Example:
    >>> report = eval_family(FamilyParams(m=0, k=2), "1e-20", ctx)
    >>> report.converged
    True
    >>> report.to_record()["value"][:12]
    '0.3183098861'
"""

from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

from pi_forge.arith.precision import BigReal, format_real

SummationMethod = Literal["leibniz", "averaged"]

RecordValue = str | int | bool | None


class EvaluationReport(BaseModel):
    """Value of a convergent alternating series with its remainder bound.

    If ``converged`` and ``certified``, the true limit lies within
    ``remainder_bound`` of ``value``, up to the accumulation slack
    ``rounding_slack`` (terms_used · 2^(−working_bits+2) · max |partial sum|).
    Without ``certified`` the bound of an averaged sum is an estimate.

    Attributes:
        value: Accelerated or plain partial sum
        remainder_bound: Bound on |value − limit|
        terms_used: Exact terms generated
        precision_bits: Target precision of the context
        working_bits: Bits every floating operation was rounded to
        converged: Whether the bound met the requested accuracy
        rounding_slack: Accumulation rounding allowance
        method: "leibniz" (plain truncation) or "averaged"
        acceleration_level: Number of averaging passes behind ``value``
        certified: Whether ``remainder_bound`` is proven for the whole tail
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: BigReal = Field(..., description="Sum of the series")
    remainder_bound: BigReal = Field(..., description="Remainder bound")
    terms_used: int = Field(..., ge=0, description="Exact terms generated")
    precision_bits: int = Field(..., ge=16, description="Target precision in bits")
    working_bits: int = Field(..., ge=16, description="Working precision in bits")
    converged: bool = Field(..., description="Accuracy target met")
    rounding_slack: BigReal = Field(..., description="Accumulation rounding allowance")
    method: SummationMethod = Field(default="leibniz", description="Summation method")
    acceleration_level: int = Field(default=0, ge=0, description="Averaging passes applied")
    certified: bool = Field(default=False, description="Bound proven past the window")

    @computed_field  # type: ignore[misc]
    @property
    def error_budget(self) -> BigReal:
        """remainder_bound + rounding_slack: the total error allowance."""
        return self.remainder_bound + self.rounding_slack

    def to_record(self) -> dict[str, RecordValue]:
        """Flatten into output-record results."""
        bits = self.precision_bits
        return {
            "value": format_real(self.value, bits),
            "remainder_bound": format_real(self.remainder_bound, bits, 10),
            "rounding_slack": format_real(self.rounding_slack, bits, 10),
            "terms_used": self.terms_used,
            "precision_bits": self.precision_bits,
            "converged": self.converged,
            "method": self.method,
            "acceleration_level": self.acceleration_level,
            "certified": self.certified,
        }


class ComplexEvaluationReport(BaseModel):
    """Value of a normalized combination with complex weights.

    The per-k sub-series are bounded separately; ``remainder_bound`` is
    their bounds weighted by |α_k| / |∑α| and bounds both the real and the
    imaginary error.

    Attributes:
        value_re: Real part (→ 1/π)
        value_im: Imaginary part (→ 0)
        remainder_bound: Bound on the distance to the limit
        terms_used: Exact terms generated over all sub-series
        certified: Whether every sub-series bound is proven
        components: Per-k reports of the sub-series
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value_re: BigReal = Field(..., description="Real part of the sum")
    value_im: BigReal = Field(..., description="Imaginary part of the sum")
    remainder_bound: BigReal = Field(..., description="Remainder bound")
    terms_used: int = Field(..., ge=0, description="Exact terms generated")
    precision_bits: int = Field(..., ge=16, description="Target precision in bits")
    working_bits: int = Field(..., ge=16, description="Working precision in bits")
    converged: bool = Field(..., description="Accuracy target met")
    certified: bool = Field(default=False, description="Every sub-series bound proven")
    rounding_slack: BigReal = Field(..., description="Accumulation rounding allowance")
    components: dict[int, EvaluationReport] = Field(
        default_factory=dict, description="Per-k sub-series reports"
    )

    @property
    def value(self) -> tuple[BigReal, BigReal]:
        """(real, imaginary) pair."""
        return self.value_re, self.value_im

    def to_record(self) -> dict[str, RecordValue]:
        """Flatten into output-record results."""
        bits = self.precision_bits
        return {
            "value_re": format_real(self.value_re, bits),
            "value_im": format_real(self.value_im, bits),
            "remainder_bound": format_real(self.remainder_bound, bits, 10),
            "rounding_slack": format_real(self.rounding_slack, bits, 10),
            "terms_used": self.terms_used,
            "precision_bits": self.precision_bits,
            "converged": self.converged,
            "certified": self.certified,
        }


class FormalExpansionDiagnostics(BaseModel):
    """Optimal-truncation diagnostics of the gamma-quotient expansion.

    Attributes:
        nu: Order ν
        k: Expansion index
        partial_sums: Scaled partial sums √π/2^(2ν) · ∑_{n≤N} T_n
        term_magnitudes: |√π/2^(2ν) · T_n| per generated term
        min_term_index: Index of the smallest |T_n| (optimal truncation)
        minimum_reached: False when the magnitudes were still falling at the
            last generated term, so min_term_index is only the best so far
        best_relative_error: Relative error of the partial sum at min_term_index
        reference_value: Γ(ν+1)/Γ(ν+k+1/2) from the gamma oracle
        terminating: True when the expansion is a finite sum (ν = m + 1/2)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nu: Fraction = Field(..., description="Order ν")
    k: int = Field(..., ge=0, description="Expansion index k")
    partial_sums: list[BigReal] = Field(..., description="Scaled partial sums")
    term_magnitudes: list[BigReal] = Field(..., description="Scaled term magnitudes")
    min_term_index: int = Field(..., ge=0, description="Optimal truncation index")
    minimum_reached: bool = Field(..., description="A larger term follows the minimum")
    best_relative_error: BigReal = Field(..., description="Error at optimal truncation")
    reference_value: BigReal = Field(..., description="Γ(ν+1)/Γ(ν+k+1/2)")
    terminating: bool = Field(..., description="Expansion is a finite sum")
    precision_bits: int = Field(..., ge=16, description="Target precision in bits")

    @property
    def best_value(self) -> BigReal:
        """Partial sum at the optimal truncation index."""
        return self.partial_sums[self.min_term_index]

    def to_record(self) -> dict[str, RecordValue]:
        """Flatten into output-record results."""
        bits = self.precision_bits
        return {
            "min_term_index": self.min_term_index,
            "minimum_reached": self.minimum_reached,
            "terms_generated": len(self.partial_sums),
            "best_value": format_real(self.best_value, bits),
            "best_relative_error": format_real(self.best_relative_error, bits, 10),
            "reference_value": format_real(self.reference_value, bits),
            "terminating": self.terminating,
        }


class WronskianReport(BaseModel):
    """Deviation of z·e^(−2z)·W{e^z K_ν, e^z I_ν} from 1.

    Attributes:
        nu: Order ν
        z: Argument
        deviation: z·W − 1 on the truncated series
        trunc_K: Last retained index of the asymptotic K series
        trunc_I: Last retained index of the ascending I series
        asymptotic_bound: First-omitted-term estimate for the K truncation,
            +inf when that term swamps the truncated sum
        ascending_tail_bound: Geometric bound on the omitted I tail
        rounding_bound: Allowance for floating evaluation
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    nu: Fraction = Field(..., description="Order ν")
    z: BigReal = Field(..., description="Argument z > 0")
    deviation: BigReal = Field(..., description="z·W − 1")
    trunc_K: int = Field(..., ge=0, description="K series truncation index")
    trunc_I: int = Field(..., ge=0, description="I series truncation index")
    asymptotic_bound: BigReal = Field(..., description="K truncation estimate")
    ascending_tail_bound: BigReal = Field(..., description="I tail bound")
    rounding_bound: BigReal = Field(..., description="Rounding allowance")
    precision_bits: int = Field(..., ge=16, description="Target precision in bits")

    @computed_field  # type: ignore[misc]
    @property
    def bound(self) -> BigReal:
        """Total estimated bound on |deviation|."""
        return self.asymptotic_bound + self.ascending_tail_bound + self.rounding_bound

    @computed_field  # type: ignore[misc]
    @property
    def within_bound(self) -> bool:
        """Whether |deviation| respects the estimated bound."""
        return bool(abs(self.deviation) <= self.bound)

    def to_record(self) -> dict[str, RecordValue]:
        """Flatten into output-record results."""
        bits = self.precision_bits
        return {
            "deviation": format_real(self.deviation, bits, 10),
            "bound": format_real(self.bound, bits, 10),
            "trunc_K": self.trunc_K,
            "trunc_I": self.trunc_I,
            "within_bound": self.within_bound,
        }
