"""
Identity certificates.

An IdentityReport is the exact-rational certificate for one (m, k) cell of
a binomial or gamma-quotient identity: the left side as a reduced
fraction, the exact target it must equal, and whether it does.

Example:
    >>> from pi_forge.identities import verify_iv2
    >>>
    >>> report = verify_iv2(1, 0)
    >>> report.lhs, report.holds
    (Fraction(1, 1), True)
    >>> report.to_record()
    {'identity_id': 'IV2', 'm': 1, 'k': 0, 'lhs': '1', 'target': '1', 'holds': True, ...}
"""

from __future__ import annotations

from enum import StrEnum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, computed_field

from pi_forge.models.reports import RecordValue


class IdentityId(StrEnum):
    """The identities that can be certified."""

    IV1 = "IV1"
    IV2 = "IV2"
    IV3 = "IV3"

    @classmethod
    def parse(cls, text: str) -> IdentityId:
        """Case-insensitive lookup ("iv2" → IV2)."""
        try:
            return cls(text.upper())
        except ValueError as e:
            choices = ", ".join(i.value.lower() for i in cls)
            raise ValueError(f"Unknown identity {text!r}; choose from {choices}") from e


class IdentityReport(BaseModel):
    """Exact certificate for one identity instance.

    Attributes:
        identity_id: Which identity was checked
        m: First index
        k: Second index
        lhs: Exact left side
        target: Exact value the left side must equal
        normative: False for cells outside the identity's stated domain
        rewriting_consistent: IV3 only; whether IV3(m, k) matched IV2(m, k−m)
            summand by summand
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    identity_id: IdentityId = Field(..., description="Identity checked")
    m: int = Field(..., ge=0, description="Index m")
    k: int = Field(..., ge=0, description="Index k")
    lhs: Fraction = Field(..., description="Exact left side")
    target: Fraction = Field(default=Fraction(1), description="Exact right side")
    normative: bool = Field(default=True, description="Inside the stated domain")
    rewriting_consistent: bool | None = Field(
        default=None, description="IV3 summands match the IV2 rewriting"
    )

    @computed_field  # type: ignore[misc]
    @property
    def holds(self) -> bool:
        """lhs equals the exact target."""
        return self.lhs == self.target

    def to_record(self) -> dict[str, RecordValue]:
        """Flatten into output-record results; rationals as "p/q"."""
        return {
            "identity_id": self.identity_id.value,
            "m": self.m,
            "k": self.k,
            "lhs": str(self.lhs),
            "target": str(self.target),
            "holds": self.holds,
            "normative": self.normative,
            "rewriting_consistent": self.rewriting_consistent,
        }
