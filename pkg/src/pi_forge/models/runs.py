"""
Sweep run tracking.

A SweepResult records one bulk certification run: which identity, the
rectangle swept, timing, status, and the ordered certificates.

Example:
    >>> from pi_forge.identities import sweep
    >>>
    >>> run = sweep("IV2", m_max=3, k_max=4)
    >>> run.all_hold
    True
    >>> print(f"Checked {run.cells_checked} cells in {run.duration_seconds}s")
"""

from __future__ import annotations

from datetime import UTC, datetime
from enum import StrEnum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, computed_field

from pi_forge.models.identities import IdentityId, IdentityReport


def _now() -> datetime:
    return datetime.now(UTC)


class RunStatus(StrEnum):
    """Status of a sweep run."""

    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class SweepResult(BaseModel):
    """Outcome of sweeping an identity over a rectangle of (m, k).

    Attributes:
        identity_id: Identity swept
        m_max: Upper bound on m
        k_max: Upper bound on k
        workers: Worker processes used
        exploratory: Whether non-normative cells were included
        started_at: When the run started
        completed_at: When the run completed (None if still running)
        status: Current run status
        reports: Certificates ordered by (m, k)
        error_message: Error message if the run failed

    Example:
        >>> run = SweepResult(identity_id=IdentityId.IV2, m_max=0, k_max=0)
        >>> run.reports.append(verify_iv2(0, 0))
        >>> run.complete()
    """

    model_config = ConfigDict(extra="ignore")

    identity_id: IdentityId = Field(..., description="Identity swept")
    m_max: int = Field(..., ge=0, description="Upper bound on m")
    k_max: int = Field(..., ge=0, description="Upper bound on k")
    workers: int = Field(default=1, ge=1, description="Worker processes")
    exploratory: bool = Field(default=False, description="Non-normative cells included")
    started_at: datetime = Field(default_factory=_now, description="Run start time")
    completed_at: datetime | None = Field(default=None, description="Run completion time")
    status: RunStatus = Field(default=RunStatus.RUNNING, description="Current run status")
    reports: list[IdentityReport] = Field(default_factory=list, description="Certificates")
    error_message: str | None = Field(default=None, description="Error message if failed")

    @computed_field  # type: ignore[misc]
    @property
    def duration_seconds(self) -> float | None:
        """Run duration in seconds, or None while running."""
        if self.completed_at is None:
            return None
        return (self.completed_at - self.started_at).total_seconds()

    @computed_field  # type: ignore[misc]
    @property
    def cells_checked(self) -> int:
        """Number of certificates produced."""
        return len(self.reports)

    @property
    def failures(self) -> list[IdentityReport]:
        """Normative certificates whose left side missed the target."""
        return [r for r in self.reports if r.normative and not r.holds]

    @computed_field  # type: ignore[misc]
    @property
    def cells_failed(self) -> int:
        """Number of falsified cells."""
        return len(self.failures)

    @computed_field  # type: ignore[misc]
    @property
    def all_hold(self) -> bool:
        """Every normative certificate holds."""
        return not self.failures

    def complete(self, error: str | None = None) -> None:
        """Mark the run as complete, or failed when ``error`` is given."""
        self.completed_at = _now()
        if error:
            self.status = RunStatus.FAILED
            self.error_message = error
        else:
            self.status = RunStatus.COMPLETED

    def summary_dict(self) -> dict[str, Any]:
        """Key run statistics for logging/reporting."""
        return {
            "identity_id": self.identity_id.value,
            "m_max": self.m_max,
            "k_max": self.k_max,
            "workers": self.workers,
            "status": self.status.value,
            "cells_checked": self.cells_checked,
            "cells_failed": self.cells_failed,
            "all_hold": self.all_hold,
            "duration_seconds": self.duration_seconds,
        }
