"""Threshold sweeps and threshold selection."""

from .selection import select_threshold, with_selection
from .sweep import (
    DEFAULT_GRIDS,
    SweepPoint,
    SweepReport,
    default_grid,
    format_sweep_csv,
    sweep,
    sweep_point,
    sweep_scores,
    threshold_grid,
    write_sweep_csv,
)

__all__ = [
    "DEFAULT_GRIDS",
    "SweepPoint",
    "SweepReport",
    "default_grid",
    "threshold_grid",
    "sweep",
    "sweep_point",
    "sweep_scores",
    "format_sweep_csv",
    "write_sweep_csv",
    "select_threshold",
    "with_selection",
]
