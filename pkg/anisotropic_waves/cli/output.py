from dataclasses import dataclass, field
import csv
import io
import json
import logging
import sys

from .config import OutputFormat

_logger = logging.getLogger(__name__)


@dataclass
class Table:
    """
    A result table with its provenance metadata. Rows follow the order of columns.
    """

    columns: list[str]
    rows: list[list] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def records(self) -> list[dict]:
        return [dict(zip(self.columns, row)) for row in self.rows]


def complex_columns(name: str) -> list[str]:
    return [f"{name}_re", f"{name}_im"]


def complex_cells(value: complex) -> list[float]:
    value = complex(value)
    return [value.real, value.imag]


def _format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        # Shortest representation that parses back to the same double
        return repr(value)
    return str(value)


def to_csv(table: Table) -> str:
    buffer = io.StringIO()
    for key, value in table.metadata.items():
        buffer.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_format_cell(value) for value in row])
    return buffer.getvalue()


def to_json(table: Table) -> str:
    return json.dumps({"metadata": table.metadata, "columns": table.columns, "rows": table.records()}, indent=2) + "\n"


def write_table(table: Table, output_format: OutputFormat, path: str | None = None) -> None:
    """
    Write a table to path, or to the standard output when path is None.
    """
    text = to_csv(table) if output_format == OutputFormat.CSV else to_json(table)
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as file:
        file.write(text)
    _logger.info(f"Wrote {len(table.rows)} rows to {path}")
