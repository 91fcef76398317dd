"""
Output records.

Every CLI command emits OutputRecords: the command name, the parameters
it ran with, and a flat results payload. Exact values are "p/q" strings
and floating values are decimal strings at full precision, so a record
survives a JSON round trip unchanged.

Example:
    >>> record = OutputRecord(
    ...     command="identity",
    ...     parameters={"id": "IV2"},
    ...     results=report.to_record(),
    ... )
    >>> line = record.model_dump_json()
    >>> OutputRecord.model_validate_json(line).model_dump_json() == line
    True
"""

from __future__ import annotations

import json
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from pi_forge.models.reports import RecordValue


class OutputRecord(BaseModel):
    """One emitted result.

    Attributes:
        command: CLI command that produced the record
        parameters: Inputs as strings, in flag order
        results: Flattened report fields
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: str = Field(..., description="Command name")
    parameters: dict[str, str] = Field(default_factory=dict, description="Input parameters")
    results: dict[str, RecordValue] = Field(default_factory=dict, description="Result payload")

    def flat(self) -> dict[str, RecordValue]:
        """Single-level mapping: command, param_<name>..., then result names."""
        row: dict[str, RecordValue] = {"command": self.command}
        for name, value in self.parameters.items():
            row[f"param_{name}"] = value
        row.update(self.results)
        return row

    @classmethod
    def json_schema_text(cls) -> str:
        """The JSON schema of a record, pretty-printed."""
        schema: dict[str, Any] = cls.model_json_schema()
        return json.dumps(schema, indent=2, sort_keys=True)
