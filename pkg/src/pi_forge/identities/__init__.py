"""
Exact verification of the finite gamma-quotient sum and the binomial identity.

Example:
    >>> from pi_forge.identities import sweep, verify_iv2
    >>>
    >>> verify_iv2(2, 3).holds
    True
    >>> sweep("iv2", m_max=5, k_max=5).all_hold
    True
"""

from pi_forge.identities.binomial import (
    iv1_summands,
    iv1_target,
    iv2_summands,
    iv3_summands,
    rewriting_consistent,
    verify,
    verify_iv1,
    verify_iv2,
    verify_iv3,
)
from pi_forge.identities.sweep import sweep

__all__ = [
    "iv1_summands",
    "iv1_target",
    "iv2_summands",
    "iv3_summands",
    "rewriting_consistent",
    "sweep",
    "verify",
    "verify_iv1",
    "verify_iv2",
    "verify_iv3",
]
