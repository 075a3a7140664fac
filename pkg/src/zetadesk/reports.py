"""Row-oriented scan reports.

Grid scans all over the package (ratio scans, trend tables, divisor
ratios) produce the same shape of result: per-row records destined for
CSV plus observed extremes and a few scan-level statistics. One small
container keeps that uniform for the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class ScanReport:
    label: str
    columns: tuple[str, ...]
    rows: tuple[tuple, ...]
    observed_min: float
    argmin: float
    observed_max: float
    argmax: float
    stats: dict = field(default_factory=dict)


def geometric_grid(n_max: int, ratio: float = 1.25, start: int = 1) -> np.ndarray:
    """Integer grid floor(ratio^k), deduplicated, capped at n_max.

    The endpoint n_max is always included so trend statements about
    "the last row" refer to the requested bound itself.
    """
    if n_max < start:
        raise ValueError("grid bound below grid start")
    points = []
    value = float(start)
    while value <= n_max:
        points.append(int(value))
        value *= ratio
        if value - points[-1] < 1.0:
            value = points[-1] + 1.0
    points.append(n_max)
    return np.unique(np.asarray(points, dtype=np.int64))


def build_scan_report(label, columns, rows, key_index, value_index, stats=None):
    """Assemble a ScanReport, reading extremes from one numeric column."""
    if not rows:
        raise ValueError("empty scan")
    values = [row[value_index] for row in rows]
    keys = [row[key_index] for row in rows]
    lo = int(np.argmin(values))
    hi = int(np.argmax(values))
    return ScanReport(
        label=label,
        columns=tuple(columns),
        rows=tuple(tuple(row) for row in rows),
        observed_min=float(values[lo]),
        argmin=float(keys[lo]),
        observed_max=float(values[hi]),
        argmax=float(keys[hi]),
        stats=dict(stats or {}),
    )
