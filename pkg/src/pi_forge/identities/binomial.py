"""
Exact certificates for the finite gamma-quotient sum and the binomial identity.

For non-negative integers m and k:

    IV1:  Γ(m+3/2)/Γ(m+k+1) = √π/2^(2m+1) · Σ_{n=0}^{m}
              (m+1)_n ⟨m⟩_n (m+1)_{k+n} (k+m+2n+1) / (n! (k+n)! (2m+2)_{k+n})

    IV2:  Σ_{n=0}^{m} C(m,n) C(m+n+k,m) / C(2m+n+k,n+m) · (m+2n+k+1)/(2m+n+k+1) = 1

    IV3:  Σ_{n=0}^{m} C(m,n) C(n+k,m) / C(m+n+k,n+m) · (2n+k+1)/(n+m+k+1) = 1,  k ≥ m

IV1 is checked with √π cancelled: Γ(m+3/2) = (1/2)_{m+1} √π and
Γ(m+k+1) = (m+k)!, so both sides are rationals. IV3(m, k) is IV2(m, k−m)
with the index shifted, which is checked summand by summand.
"""

from __future__ import annotations

import math
from fractions import Fraction

from pi_forge.arith.rational import binomial, falling_factorial, rising_factorial
from pi_forge.errors import DomainError
from pi_forge.models.identities import IdentityId, IdentityReport

HALF = Fraction(1, 2)


def _check_indices(m: int, k: int) -> None:
    if m < 0 or k < 0:
        raise DomainError(f"m and k must be non-negative, got m = {m}, k = {k}")


def iv1_summands(m: int, k: int) -> list[Fraction]:
    """Summands of the IV1 finite sum, √π and 2^(2m+1) excluded."""
    _check_indices(m, k)
    return [
        rising_factorial(m + 1, n)
        * falling_factorial(m, n)
        * rising_factorial(m + 1, k + n)
        * (k + m + 2 * n + 1)
        / (math.factorial(n) * math.factorial(k + n) * rising_factorial(2 * m + 2, k + n))
        for n in range(m + 1)
    ]


def iv1_target(m: int, k: int) -> Fraction:
    """Γ(m+3/2) / (√π Γ(m+k+1)) = (1/2)_{m+1} / (m+k)!."""
    _check_indices(m, k)
    return rising_factorial(HALF, m + 1) / math.factorial(m + k)


def iv2_summands(m: int, k: int) -> list[Fraction]:
    """Summands of IV2 at (m, k)."""
    _check_indices(m, k)
    return [
        binomial(m, n)
        * binomial(m + n + k, m)
        / binomial(2 * m + n + k, n + m)
        * Fraction(m + 2 * n + k + 1, 2 * m + n + k + 1)
        for n in range(m + 1)
    ]


def iv3_summands(m: int, k: int) -> list[Fraction]:
    """Summands of IV3 at (m, k); any k ≥ 0 is accepted here."""
    _check_indices(m, k)
    return [
        binomial(m, n)
        * binomial(n + k, m)
        / binomial(m + n + k, n + m)
        * Fraction(2 * n + k + 1, n + m + k + 1)
        for n in range(m + 1)
    ]


def rewriting_consistent(m: int, k: int) -> bool:
    """IV3(m, k) equals IV2(m, k−m) summand by summand (requires k ≥ m)."""
    if k < m:
        raise DomainError(f"IV3 rewrites IV2 only for k >= m, got m = {m}, k = {k}")
    return iv3_summands(m, k) == iv2_summands(m, k - m)


def verify_iv1(m: int, k: int) -> IdentityReport:
    """Certify IV1 at (m, k) as an exact rational equality."""
    lhs = sum(iv1_summands(m, k), Fraction(0)) / 2 ** (2 * m + 1)
    return IdentityReport(identity_id=IdentityId.IV1, m=m, k=k, lhs=lhs, target=iv1_target(m, k))


def verify_iv2(m: int, k: int) -> IdentityReport:
    """Certify IV2 at (m, k)."""
    lhs = sum(iv2_summands(m, k), Fraction(0))
    return IdentityReport(identity_id=IdentityId.IV2, m=m, k=k, lhs=lhs)


def verify_iv3(m: int, k: int, *, exploratory: bool = False) -> IdentityReport:
    """Certify IV3 at (m, k).

    IV3 is stated for k ≥ m only. With ``exploratory=True`` cells with
    k < m are evaluated anyway and marked non-normative; their left side
    need not be 1.

    Raises:
        DomainError: If k < m and not exploratory
    """
    _check_indices(m, k)
    normative = k >= m
    if not normative and not exploratory:
        raise DomainError(
            f"IV3 holds for k >= m; got m = {m}, k = {k} (use exploratory=True to evaluate)"
        )
    lhs = sum(iv3_summands(m, k), Fraction(0))
    return IdentityReport(
        identity_id=IdentityId.IV3,
        m=m,
        k=k,
        lhs=lhs,
        normative=normative,
        rewriting_consistent=rewriting_consistent(m, k) if normative else None,
    )


VERIFIERS = {
    IdentityId.IV1: verify_iv1,
    IdentityId.IV2: verify_iv2,
}


def verify(
    identity_id: IdentityId | str, m: int, k: int, *, exploratory: bool = False
) -> IdentityReport:
    """Certify any identity at (m, k)."""
    identity = IdentityId.parse(identity_id)
    if identity is IdentityId.IV3:
        return verify_iv3(m, k, exploratory=exploratory)
    return VERIFIERS[identity](m, k)
