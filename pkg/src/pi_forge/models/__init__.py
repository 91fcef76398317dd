"""
Data models for pi-forge.

This module provides Pydantic-based data models for:
- EvaluationReport, ComplexEvaluationReport: certified series values
- FormalExpansionDiagnostics, WronskianReport: expansion diagnostics
- IdentityReport: exact identity certificates
- SweepResult: bulk certification runs
- OutputRecord: the unit of CLI output
"""

from pi_forge.models.identities import IdentityId, IdentityReport
from pi_forge.models.records import OutputRecord
from pi_forge.models.reports import (
    ComplexEvaluationReport,
    EvaluationReport,
    FormalExpansionDiagnostics,
    RecordValue,
    SummationMethod,
    WronskianReport,
)
from pi_forge.models.runs import RunStatus, SweepResult

__all__ = [
    "ComplexEvaluationReport",
    "EvaluationReport",
    "FormalExpansionDiagnostics",
    "IdentityId",
    "IdentityReport",
    "OutputRecord",
    "RecordValue",
    "RunStatus",
    "SummationMethod",
    "SweepResult",
    "WronskianReport",
]
