"""Loading and validating sweep CSV files.

The expected layout is the one stokes-squeeze emits: optional '#' comment
lines carrying metadata (key: value), then a header row naming the sweep
variable and one label per curve, then numeric data rows.  Validation
errors raise SchemaError with row/column diagnostics; this module never
recomputes any physics.
"""
from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


class SchemaError(ValueError):
    """The file does not match the sweep CSV schema; message says where."""


@dataclass(frozen=True)
class SweepTable:
    """Parsed sweep data: one x column plus one y column per labeled curve."""

    x_name: str
    labels: tuple[str, ...]
    x: np.ndarray
    columns: dict[str, np.ndarray]
    metadata: dict[str, str] = field(default_factory=dict)

    @property
    def curve_count(self) -> int:
        return len(self.labels)


def _parse_metadata(comment_lines: list[str]) -> dict[str, str]:
    meta: dict[str, str] = {}
    for line in comment_lines:
        body = line.lstrip("#").strip()
        key, sep, value = body.partition(":")
        if sep and key.strip() and not key.strip().startswith("curve "):
            meta.setdefault(key.strip(), value.strip())
    return meta


def load_sweep_csv(path: str | Path) -> SweepTable:
    """Read and validate one sweep CSV file."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except UnicodeDecodeError as exc:
        raise SchemaError(f"{path}: not valid UTF-8 text ({exc})") from exc

    comments = [l for l in text.splitlines() if l.startswith("#")]
    body = [l for l in text.splitlines() if l and not l.startswith("#")]
    if not body:
        raise SchemaError(f"{path}: no header row found")

    rows = list(csv.reader(body))
    header = rows[0]
    if len(header) < 2:
        raise SchemaError(
            f"{path}: header must have a sweep column plus at least one "
            f"curve column (got {len(header)} column(s): {header})"
        )
    x_name, *labels = [cell.strip() for cell in header]
    if not x_name:
        raise SchemaError(f"{path}: empty sweep column name in header")
    for i, label in enumerate(labels):
        if not label:
            raise SchemaError(f"{path}: empty curve label in header column {i + 2}")
    if len(set(labels)) != len(labels):
        raise SchemaError(f"{path}: duplicate curve labels in header: {labels}")

    data_rows = rows[1:]
    if not data_rows:
        raise SchemaError(f"{path}: no data rows after the header")

    values = np.empty((len(data_rows), len(header)), dtype=float)
    for r, row in enumerate(data_rows, start=2):  # 1-based, header is row 1
        if len(row) != len(header):
            raise SchemaError(
                f"{path}: row {r} has {len(row)} cells, expected {len(header)}"
            )
        for c, cell in enumerate(row):
            try:
                values[r - 2, c] = float(cell)
            except ValueError as exc:
                raise SchemaError(
                    f"{path}: row {r}, column {c + 1} ({header[c]!r}): "
                    f"not a number: {cell!r}"
                ) from exc

    x = values[:, 0]
    if np.any(np.diff(x) <= 0.0):
        bad = int(np.argmax(np.diff(x) <= 0.0)) + 3  # file row of the offender
        raise SchemaError(
            f"{path}: sweep column {x_name!r} must be strictly increasing "
            f"(violated at row {bad})"
        )

    columns = {label: values[:, j + 1] for j, label in enumerate(labels)}
    return SweepTable(x_name, tuple(labels), x, columns, _parse_metadata(comments))
