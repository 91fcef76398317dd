"""
Record serialization.

Records go out as JSON Lines (one record per line), CSV with a header row,
or a rich table for humans. JSON and CSV are stable formats; the table is
not.
"""

from __future__ import annotations

from collections.abc import Sequence
from pathlib import Path
from typing import Literal, TextIO

import pandas as pd
import structlog
from rich.console import Console
from rich.table import Table

from pi_forge.models.records import OutputRecord

logger = structlog.get_logger(__name__)

ExportFormat = Literal["json", "csv", "table"]

EXPORT_FORMATS: tuple[ExportFormat, ...] = ("json", "csv", "table")


def records_to_dataframe(records: Sequence[OutputRecord]) -> pd.DataFrame:
    """One row per record, columns in first-seen order.

    Results are already strings, ints or bools, so nothing is reformatted.
    """
    return pd.DataFrame([record.flat() for record in records], dtype=object)


def to_jsonl(records: Sequence[OutputRecord]) -> str:
    """JSON Lines text, newline-terminated."""
    return "".join(record.model_dump_json() + "\n" for record in records)


def to_csv(records: Sequence[OutputRecord]) -> str:
    """CSV text with a header row."""
    if not records:
        return ""
    df = records_to_dataframe(records)
    return str(df.to_csv(index=False, lineterminator="\n"))


def render_table(
    records: Sequence[OutputRecord], console: Console, title: str | None = None
) -> None:
    """Print records as a rich table."""
    df = records_to_dataframe(records)
    table = Table(title=title)
    for column in df.columns:
        table.add_column(str(column), style="cyan" if str(column).startswith("param_") else None)
    for row in df.itertuples(index=False):
        table.add_row(*("" if pd.isna(value) else str(value) for value in row))
    console.print(table)


def format_records(records: Sequence[OutputRecord], format: ExportFormat) -> str:
    """Serialize records in a stable format (json or csv)."""
    if format == "json":
        return to_jsonl(records)
    if format == "csv":
        return to_csv(records)
    raise ValueError(f"Unsupported format: {format}")


def emit_records(
    records: Sequence[OutputRecord],
    format: ExportFormat,
    stream: TextIO,
    title: str | None = None,
) -> None:
    """Write records to an open text stream."""
    if format == "table":
        render_table(records, Console(file=stream, soft_wrap=True), title=title)
        return
    stream.write(format_records(records, format))


def write_records(
    records: Sequence[OutputRecord],
    output_path: Path | str,
    format: ExportFormat = "json",
) -> Path:
    """Write records to a file.

    Args:
        records: Records to write
        output_path: Output file path (parent directories are created)
        format: Output format

    Returns:
        Path to the written file
    """
    output_path = Path(output_path)
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with output_path.open("w", encoding="utf-8", newline="") as fh:
        emit_records(records, format, fh)

    logger.info(
        "records_exported",
        format=format,
        rows=len(records),
        path=str(output_path),
    )

    return output_path
