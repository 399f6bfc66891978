"""Output formatting shared by the CLI commands.

Text and CSV round values to a significant-digit precision (default 6); JSON
always serializes full-precision floats so values survive a round trip.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass

from .errors import InvalidArgumentError

FORMAT_TEXT = "text"
FORMAT_JSON = "json"
FORMAT_CSV = "csv"


@dataclass(frozen=True)
class OutputEnvelope:
    format: str = FORMAT_TEXT
    destination: str | None = None  # path, or None for stdout
    precision: int = 6

    def __post_init__(self) -> None:
        if self.format not in (FORMAT_TEXT, FORMAT_JSON, FORMAT_CSV):
            raise InvalidArgumentError(f"unknown output format {self.format!r}")
        if not 3 <= self.precision <= 17:
            raise InvalidArgumentError(
                f"precision must be within [3, 17], got {self.precision}"
            )


def format_value(value: object, precision: int) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{precision}g}"
    if value is None:
        return ""
    return str(value)


def render_record_text(record: dict, precision: int) -> str:
    lines = [f"{key} = {format_value(value, precision)}" for key, value in record.items()]
    return "\n".join(lines) + "\n"


def render_table_text(columns: list[str], rows: list[dict], precision: int) -> str:
    cells = [[format_value(row.get(col), precision) for col in columns] for row in rows]
    widths = [
        max(len(col), *(len(line[i]) for line in cells)) if cells else len(col)
        for i, col in enumerate(columns)
    ]
    out = ["  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)).rstrip()]
    for line in cells:
        out.append("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(line)).rstrip())
    return "\n".join(out) + "\n"


def render_table_csv(columns: list[str], rows: list[dict], precision: int) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(col), precision) for col in columns])
    return buffer.getvalue()


def render_json(payload: object) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def emit(envelope: OutputEnvelope, text: str) -> None:
    if envelope.destination is None:
        sys.stdout.write(text)
    else:
        with open(envelope.destination, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def emit_record(envelope: OutputEnvelope, record: dict) -> None:
    """A record renders as key = value lines (text) or a one-row table (csv)."""
    if envelope.format == FORMAT_JSON:
        emit(envelope, render_json(record))
    elif envelope.format == FORMAT_CSV:
        emit(envelope, render_table_csv(list(record), [record], envelope.precision))
    else:
        emit(envelope, render_record_text(record, envelope.precision))


def emit_table(envelope: OutputEnvelope, columns: list[str], rows: list[dict]) -> None:
    if envelope.format == FORMAT_JSON:
        emit(envelope, render_json(rows))
    elif envelope.format == FORMAT_CSV:
        emit(envelope, render_table_csv(columns, rows, envelope.precision))
    else:
        emit(envelope, render_table_text(columns, rows, envelope.precision))
