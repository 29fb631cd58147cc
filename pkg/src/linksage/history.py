"""Browser-history CSV ingestion and featurization.

The interchange format is a plain comma-separated file with the exact
header ``url,first_visit,last_visit,visit_count,frecency``. There is no
quoting: a URL containing a comma cannot be represented and such rows are
rejected. Timestamps are integer Unix seconds; the frecency column may be
empty for rows that only need a prediction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadNumber,
    EmptyInput,
    InvariantViolation,
    MalformedRow,
    MissingHeader,
    MixedTargets,
)

HISTORY_HEADER = "url,first_visit,last_visit,visit_count,frecency"

#: Column order of every feature matrix built from history records.
FEATURE_ORDER = ("first_visit", "last_visit", "visit_count")

_INT_RE = re.compile(r"-?\d+$")


@dataclass(frozen=True)
class HistoryRecord:
    """One browsing-history row; frecency is absent for prediction-only rows."""

    url: str
    first_visit: int
    last_visit: int
    visit_count: int
    frecency: float | None = None


@dataclass
class FeatureMatrix:
    """Numeric view of a record list, columns ordered per FEATURE_ORDER."""

    features: np.ndarray
    targets: np.ndarray | None = None

    @property
    def n_rows(self) -> int:
        return self.features.shape[0]

    @property
    def n_features(self) -> int:
        return self.features.shape[1]


def _parse_int(value: str, line_no: int, column: str) -> int:
    if not _INT_RE.fullmatch(value):
        raise BadNumber(line_no, column, value)
    return int(value)


def _parse_float(value: str, line_no: int, column: str) -> float:
    try:
        parsed = float(value)
    except ValueError:
        raise BadNumber(line_no, column, value) from None
    if not np.isfinite(parsed):
        raise BadNumber(line_no, column, value)
    return parsed


def _split_lines(csv_text: str) -> list[str]:
    lines = [line.rstrip("\r") for line in csv_text.split("\n")]
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline, not an empty row
    return lines


def parse_history(csv_text: str) -> list[HistoryRecord]:
    """Parse a history CSV into records, preserving row order.

    Every malformed input raises a located error; rows are never silently
    dropped. Line numbers are 1-based with the header on line 1.
    """
    lines = _split_lines(csv_text)
    if not lines or lines[0] != HISTORY_HEADER:
        raise MissingHeader(HISTORY_HEADER)
    records = []
    for line_no, line in enumerate(lines[1:], start=2):
        parts = line.split(",")
        if len(parts) != 5:
            raise MalformedRow(line_no)
        url, first_raw, last_raw, count_raw, frecency_raw = parts
        first = _parse_int(first_raw, line_no, "first_visit")
        last = _parse_int(last_raw, line_no, "last_visit")
        count = _parse_int(count_raw, line_no, "visit_count")
        frecency = None
        if frecency_raw != "":
            frecency = _parse_float(frecency_raw, line_no, "frecency")
        if not url.strip():
            raise InvariantViolation(line_no, "url is empty")
        if last < first:
            raise InvariantViolation(line_no, f"last_visit {last} < first_visit {first}")
        if count < 1:
            raise InvariantViolation(line_no, f"visit_count {count} < 1")
        if frecency is not None and not frecency >= 0:
            raise InvariantViolation(line_no, f"frecency {frecency} is negative")
        records.append(HistoryRecord(url, first, last, count, frecency))
    return records


def _format_frecency(value: float | None) -> str:
    if value is None:
        return ""
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def serialize_history(records: list[HistoryRecord]) -> str:
    """Inverse of parse_history; round-trips records field for field."""
    lines = [HISTORY_HEADER]
    for record in records:
        if "," in record.url or "\n" in record.url:
            raise ValueError(f"url cannot be serialized without quoting: {record.url!r}")
        lines.append(
            f"{record.url},{record.first_visit},{record.last_visit},"
            f"{record.visit_count},{_format_frecency(record.frecency)}"
        )
    return "\n".join(lines) + "\n"


def to_feature_matrix(records: list[HistoryRecord]) -> FeatureMatrix:
    """Stack records into the regression feature matrix, row order preserved.

    Targets are populated only when every record carries a frecency value;
    a mix of present and absent values is an error rather than a guess.
    """
    if not records:
        raise EmptyInput("no records to featurize")
    with_target = [record.frecency is not None for record in records]
    if any(with_target) and not all(with_target):
        raise MixedTargets()
    features = np.array(
        [[r.first_visit, r.last_visit, r.visit_count] for r in records], dtype=float
    )
    targets = None
    if all(with_target):
        targets = np.array([r.frecency for r in records], dtype=float)
    return FeatureMatrix(features, targets)
