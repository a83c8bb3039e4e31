"""Citation matrix and partition files.

Matrix files are UTF-8 comma-separated text.  The first row holds the
column labels, the first column the row labels, the top-left field is
ignored, and an empty field is a missing value.  Partition files hold one
``label,group`` pair per line with no header.  Labels are taken verbatim;
quoting is not supported, so labels cannot contain commas or double
quotes.  LF and CRLF line endings are both accepted; blank lines are
skipped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import MatrixFormatError, MissingValueError, NegativeCountError
from .tables import Partition

# Cutoff of the printed citation reports; missing cells fall below it.
DEFAULT_FILL = 5.0


@dataclass(frozen=True, eq=False)
class RawCountTable:
    """Nonnegative counts with row and column labels.

    ``filled`` marks cells that were missing in the file and replaced.
    """

    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    cells: np.ndarray
    filled: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape


def _lines(path) -> list[tuple[int, str]]:
    try:
        text = Path(path).read_bytes().decode("utf-8")
    except UnicodeDecodeError as exc:
        raise MatrixFormatError(f"{path}: not UTF-8 text ({exc.reason})") from None
    out = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line[:-1] if line.endswith("\r") else line
        if line.strip():
            out.append((lineno, line))
    return out


def _unique(labels, what, path) -> tuple[str, ...]:
    seen = set()
    for lab in labels:
        if lab == "":
            raise MatrixFormatError(f"{path}: empty {what} label")
        if '"' in lab:
            raise MatrixFormatError(f"{path}: quoted {what} label {lab!r} (quoting is not supported)")
        if lab in seen:
            raise MatrixFormatError(f"{path}: duplicate {what} label {lab!r}")
        seen.add(lab)
    return tuple(labels)


def _number(text: str, lineno: int, path) -> float:
    try:
        value = float(text)
    except ValueError:
        raise MatrixFormatError(f"{path}:{lineno}: not a number: {text!r}") from None
    if not math.isfinite(value):
        raise MatrixFormatError(f"{path}:{lineno}: not a finite number: {text!r}")
    if value < 0:
        raise NegativeCountError(f"{path}:{lineno}: negative count {value!r}")
    return value


def parse_missing(policy: str) -> Optional[float]:
    """Translate ``fill:K``, ``fill`` or ``error`` into a fill value (None = error)."""
    if policy == "error":
        return None
    if policy == "fill":
        return DEFAULT_FILL
    if policy.startswith("fill:"):
        value = float(policy[5:])
        if not math.isfinite(value) or value < 0:
            raise ValueError(f"fill value must be a nonnegative number, got {policy[5:]!r}")
        return value
    raise ValueError(f"missing policy must be 'fill:K' or 'error', got {policy!r}")


def read_matrix(path, fill: Optional[float] = DEFAULT_FILL) -> RawCountTable:
    """Read a labeled count matrix.

    Missing cells become ``fill``; with ``fill=None`` the first missing cell
    raises ``MissingValueError`` naming its row and column.
    """
    lines = _lines(path)
    if not lines:
        raise MatrixFormatError(f"{path}: empty file")
    header = lines[0][1].split(",")
    if len(header) < 2:
        raise MatrixFormatError(f"{path}: header has no column labels")
    col_labels = _unique(header[1:], "column", path)
    if len(lines) < 2:
        raise MatrixFormatError(f"{path}: no data rows")
    row_labels, rows, missing = [], [], []
    for lineno, line in lines[1:]:
        fields = line.split(",")
        if len(fields) != len(header):
            raise MatrixFormatError(
                f"{path}:{lineno}: ragged row ({len(fields)} fields, expected {len(header)})"
            )
        label = fields[0]
        values, gaps = [], []
        for col, text in zip(col_labels, fields[1:]):
            if text.strip() == "":
                if fill is None:
                    raise MissingValueError(label, col)
                values.append(fill)
                gaps.append(True)
            else:
                values.append(_number(text, lineno, path))
                gaps.append(False)
        row_labels.append(label)
        rows.append(values)
        missing.append(gaps)
    cells = np.array(rows, dtype=float)
    filled = np.array(missing, dtype=bool)
    cells.setflags(write=False)
    filled.setflags(write=False)
    return RawCountTable(_unique(row_labels, "row", path), col_labels, cells, filled)


def _format(value: float) -> str:
    return str(int(value)) if float(value).is_integer() and abs(value) < 2**53 else repr(float(value))


def format_matrix(table) -> str:
    """Text of a matrix file; accepts any object with labels and ``cells``."""
    cells = np.asarray(table.cells, dtype=float)
    for lab in (*table.row_labels, *table.col_labels):
        if "," in lab or "\n" in lab or "\r" in lab:
            raise MatrixFormatError(f"label {lab!r} cannot be written unquoted")
    lines = ["," + ",".join(table.col_labels)]
    for lab, row in zip(table.row_labels, cells):
        lines.append(lab + "," + ",".join(_format(v) for v in row))
    return "\n".join(lines) + "\n"


def write_matrix(table, path) -> None:
    Path(path).write_text(format_matrix(table), encoding="utf-8", newline="\n")


def read_partition(path) -> Partition:
    lines = _lines(path)
    if not lines:
        raise MatrixFormatError(f"{path}: empty partition file")
    assignments: dict[str, str] = {}
    for lineno, line in lines:
        fields = line.split(",")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise MatrixFormatError(f"{path}:{lineno}: expected 'label,group'")
        label, group = fields
        if '"' in line:
            raise MatrixFormatError(f"{path}:{lineno}: quoting is not supported")
        if label in assignments:
            raise MatrixFormatError(f"{path}:{lineno}: duplicate label {label!r}")
        assignments[label] = group
    return Partition(assignments)


def format_partition(part: Partition) -> str:
    for lab, g in part.assignments.items():
        if any(ch in s for s in (lab, g) for ch in ",\r\n"):
            raise MatrixFormatError(f"entry {lab!r},{g!r} cannot be written unquoted")
    return "".join(f"{lab},{g}\n" for lab, g in part.assignments.items())


def write_partition(part: Partition, path) -> None:
    Path(path).write_text(format_partition(part), encoding="utf-8", newline="\n")
