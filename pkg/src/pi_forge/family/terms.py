"""
Exact terms of the 1/π family and of its normalized combinations.

For m ≥ 0 and k ≥ 2,

    1/π = P(m, k) · Σ_n (m+1/2)_n ⟨m−1/2⟩_n (m+1/2)_{k+n} (k+m+2n+1/2)
                        / (n! (k+n)! (2m+k+n)!)
    P(m, k) = (1/2)_{m+k} (2m)! / (2^(2m) m!)

Terms n ≤ m are positive; from n = m on they alternate in sign and
decrease in magnitude. The m = 0 row factors as

    term_n = (−1)^n [(1/2)_n / n!]^3 f_k(n)
    f_k(n) = (1/2)_k (n+1/2)_k (k+2n+1/2) / [(n+1)_k]^2

and any normalized combination g(n) = Σ α_k f_k(n) / Σ α_k also sums to 1/π.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from itertools import permutations
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from pi_forge.arith.rational import falling_factorial, parse_rational, rising_factorial
from pi_forge.errors import ZeroNormalization
from pi_forge.series.streams import TermStream

HALF = Fraction(1, 2)

ComplexRational = tuple[Fraction, Fraction]


class FamilyParams(BaseModel):
    """Indices (m, k) of one series of the family.

    Attributes:
        m: m ≥ 0
        k: k ≥ 2 (the series converge for k ≥ 2)
    """

    model_config = ConfigDict(frozen=True)

    m: int = Field(default=0, ge=0, description="Index m ≥ 0")
    k: int = Field(default=2, description="Index k ≥ 2")

    @field_validator("k")
    @classmethod
    def validate_k(cls, v: int) -> int:
        """The family converges only for k ≥ 2."""
        if v < 2:
            raise ValueError(f"k must be >= 2 for the 1/π series to converge, got k = {v}")
        return v


def family_prefactor(params: FamilyParams) -> Fraction:
    """P(m, k) = (1/2)_{m+k} (2m)! / (2^(2m) m!)."""
    m, k = params.m, params.k
    return (
        rising_factorial(HALF, m + k)
        * math.factorial(2 * m)
        / (2 ** (2 * m) * math.factorial(m))
    )


def family_term(params: FamilyParams, n: int) -> Fraction:
    """The full n-th summand, prefactor included."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    m, k = params.m, params.k
    mh = m + HALF
    numerator = (
        rising_factorial(mh, n)
        * falling_factorial(m - HALF, n)
        * rising_factorial(mh, k + n)
        * (k + m + 2 * n + HALF)
    )
    denominator = math.factorial(n) * math.factorial(k + n) * math.factorial(2 * m + k + n)
    return family_prefactor(params) * numerator / denominator


def family_ratio(params: FamilyParams, n: int) -> Fraction:
    """term_{n+1} / term_n, negative exactly when n ≥ m."""
    m, k = params.m, params.k
    mh = m + HALF
    return (
        (mh + n)
        * (m - HALF - n)
        * (mh + k + n)
        * (k + m + 2 * n + Fraction(5, 2))
        / ((n + 1) * (k + n + 1) * (2 * m + k + n + 1) * (k + m + 2 * n + HALF))
    )


def family_stream(params: FamilyParams) -> TermStream[Fraction]:
    """Exact stream of family terms by ratio recurrence."""
    return TermStream(
        family_term(params, 0),
        lambda n: family_ratio(params, n),
        name=f"family(m={params.m}, k={params.k})",
        ratio_rule=(
            "(m+1/2+n)(m−1/2−n)(m+1/2+k+n)(k+m+2n+5/2)"
            " / ((n+1)(k+n+1)(2m+k+n+1)(k+m+2n+1/2))"
        ),
        direct=lambda n: family_term(params, n),
    )


def leibniz_check(params: FamilyParams, n_max: int) -> list[int]:
    """Indices n in (m, n_max] where term_{n+1} fails to alternate or shrink.

    Returns:
        Violating indices; empty when the alternating-series hypotheses hold
    """
    violations = []
    for n in range(params.m + 1, n_max + 1):
        r = family_ratio(params, n)
        if not (-1 < r < 0):
            violations.append(n)
    return violations


def _pairs_into_monotone_factors(
    uppers: tuple[Fraction, ...], lowers: tuple[int, ...], shift: Fraction
) -> bool:
    """Whether (x+shift) Π Γ(x+a_i) / Π Γ(x+b_i) splits into completely monotone factors.

    Γ(x+a)/Γ(x+b) is completely monotone on x > −a when b ≥ a, and
    (x+c) Γ(x+a)/Γ(x+b) = (1 + (c−a)/(x+a)) · Γ(x+a+1)/Γ(x+b) is when c ≥ a
    and b ≥ a + 1. Products of completely monotone functions stay so.
    """
    for order in permutations(lowers):
        for absorbing in range(len(uppers)):
            if all(
                (shift >= a and b >= a + 1) if i == absorbing else b >= a
                for i, (a, b) in enumerate(zip(uppers, order, strict=True))
            ):
                return True
    return False


def tail_completely_monotone(params: FamilyParams) -> bool:
    """Whether |term_n| is a completely monotone function of n beyond n = m.

    For n > m,

        |term_n| ∝ Γ(n+m+1/2) Γ(n−m+1/2) Γ(n+k+m+1/2) (n + (k+m+1/2)/2)
                   / (Γ(n+1) Γ(n+k+1) Γ(n+2m+k+1))

    If the gamma ratios pair off into completely monotone factors, every
    forward difference (−Δ)^j |term_n| is positive. Then each averaging level
    alternates and decreases over the whole tail, not just the computed
    window, and its last difference is a true remainder bound. The pairing
    exists for m = 0 and for k ≥ m.
    """
    m, k = params.m, params.k
    uppers = (m + HALF, HALF - m, k + m + HALF)
    lowers = (1, k + 1, 2 * m + k + 1)
    return _pairs_into_monotone_factors(uppers, lowers, (k + m + HALF) / 2)


def f_k(k: int, n: int) -> Fraction:
    """f_k(n) = (1/2)_k (n+1/2)_k (k+2n+1/2) / [(n+1)_k]^2."""
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return (
        rising_factorial(HALF, k)
        * rising_factorial(n + HALF, k)
        * (k + 2 * n + HALF)
        / rising_factorial(n + 1, k) ** 2
    )


def central_cube(n: int) -> Fraction:
    """(−1)^n [(1/2)_n / n!]^3, the weight shared by every m = 0 series."""
    base = rising_factorial(HALF, n) / math.factorial(n)
    return (-1) ** n * base**3


# k ":" real [± imag "i"] | k ":" imag "i"
_NUMBER = r"\d+(?:\.\d+)?(?:/\d+)?"
_WEIGHT = re.compile(
    rf"^\s*(?P<k>\d+)\s*:\s*(?:"
    rf"(?P<re>[+-]?{_NUMBER})(?P<im>[+-](?:{_NUMBER})?)i"
    rf"|(?P<re_only>[+-]?{_NUMBER})"
    rf"|(?P<im_only>[+-]?(?:{_NUMBER})?)i"
    rf")\s*$"
)


def _imaginary(text: str) -> Fraction:
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return parse_rational(text)


class Weight(BaseModel):
    """One weight α_k = re + i·im of a combination."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    k: int = Field(..., ge=2, description="Series index k ≥ 2")
    re: Fraction = Field(default=Fraction(0), description="Real part of α_k")
    im: Fraction = Field(default=Fraction(0), description="Imaginary part of α_k")

    @field_validator("re", "im", mode="before")
    @classmethod
    def parse_part(cls, v: Any) -> Fraction:
        """Accept "p/q" strings, ints and Fractions."""
        return parse_rational(v)

    @classmethod
    def parse(cls, text: str) -> Weight:
        """Parse ``k:re``, ``k:re±imi`` or ``k:imi``.

        Raises:
            ValueError: If the entry does not follow the grammar
        """
        match = _WEIGHT.match(text)
        if match is None:
            raise ValueError(f"Bad weight {text!r}: expected k:re[±imi], e.g. 2:1 or 4:-3+1/2i")
        groups = match.groupdict()
        k = int(groups["k"])
        if groups["re"] is not None:
            return cls(k=k, re=parse_rational(groups["re"]), im=_imaginary(groups["im"]))
        if groups["re_only"] is not None:
            return cls(k=k, re=parse_rational(groups["re_only"]))
        return cls(k=k, im=_imaginary(groups["im_only"]))

    def __str__(self) -> str:
        if self.im == 0:
            return f"{self.k}:{self.re}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.k}:{self.re}{sign}{abs(self.im)}i"


class CombinationSpec(BaseModel):
    """Weights α_k of a normalized combination g(n) = Σ α_k f_k(n) / Σ α_k.

    Attributes:
        weights: Distinct k ≥ 2 with complex rational α_k
    """

    model_config = ConfigDict(frozen=True)

    weights: list[Weight] = Field(..., min_length=1, description="Weights α_k")

    @model_validator(mode="after")
    def validate_distinct(self) -> CombinationSpec:
        """Each k may appear once."""
        ks = [w.k for w in self.weights]
        if len(set(ks)) != len(ks):
            raise ValueError(f"Weights must use distinct k, got {ks}")
        return self

    @classmethod
    def parse(cls, text: str) -> CombinationSpec:
        """Parse a comma-separated weight list, e.g. ``"2:1+5i,4:-3"``."""
        entries = [part for part in text.split(",") if part.strip()]
        if not entries:
            raise ValueError("Empty weight list")
        return cls(weights=[Weight.parse(part) for part in entries])

    @property
    def total(self) -> ComplexRational:
        """Σ α_k."""
        re_total = sum((w.re for w in self.weights), Fraction(0))
        im_total = sum((w.im for w in self.weights), Fraction(0))
        return re_total, im_total

    def normalized(self) -> dict[int, ComplexRational]:
        """w_k = α_k / Σ α, exactly.

        Raises:
            ZeroNormalization: If Σ α = 0
        """
        s_re, s_im = self.total
        norm = s_re * s_re + s_im * s_im
        if norm == 0:
            raise ZeroNormalization(f"Weights {self} sum to zero; g(n) cannot be normalized")
        return {
            w.k: ((w.re * s_re + w.im * s_im) / norm, (w.im * s_re - w.re * s_im) / norm)
            for w in self.weights
        }

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


def combination_g(spec: CombinationSpec, n: int) -> ComplexRational:
    """g(n) = Σ α_k f_k(n) / Σ α_k as an exact (re, im) pair."""
    re_part, im_part = Fraction(0), Fraction(0)
    for k, (w_re, w_im) in spec.normalized().items():
        value = f_k(k, n)
        re_part += w_re * value
        im_part += w_im * value
    return re_part, im_part


def combination_term(spec: CombinationSpec, n: int) -> ComplexRational:
    """(−1)^n [(1/2)_n / n!]^3 g(n) as an exact (re, im) pair."""
    weight = central_cube(n)
    g_re, g_im = combination_g(spec, n)
    return weight * g_re, weight * g_im
