"""
Export of output records to JSON Lines, CSV and rich tables.

Example:
    >>> from pi_forge.export import to_csv, write_records
    >>>
    >>> print(to_csv(records))
    >>> write_records(records, "out/iv2.jsonl", format="json")
"""

from pi_forge.export.records import (
    EXPORT_FORMATS,
    ExportFormat,
    emit_records,
    format_records,
    records_to_dataframe,
    render_table,
    to_csv,
    to_jsonl,
    write_records,
)

__all__ = [
    "EXPORT_FORMATS",
    "ExportFormat",
    "emit_records",
    "format_records",
    "records_to_dataframe",
    "render_table",
    "to_csv",
    "to_jsonl",
    "write_records",
]
