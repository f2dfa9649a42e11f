"""Rules of thumb for picking a threshold from a sweep."""

from __future__ import annotations

from typing import Optional, Tuple, Union

from ..core.exceptions import ValidationError
from ..core.types import SelectionRule
from ..utils.config import DEFAULT_JUMP_FACTOR
from ..utils.logger import get_logger
from .sweep import SweepReport

logger = get_logger("sweep.selection")

# absorbs rounding in differences of normalized sizes
_JUMP_TOLERANCE = 1e-12


def _max_modularity_delta(report: SweepReport) -> float:
    best_delta: Optional[float] = None
    best_value: Optional[float] = None
    for point in report.points:
        if point.modularity is None:
            continue
        # points ascend in delta; ">=" keeps the larger threshold on ties
        if best_value is None or point.modularity >= best_value:
            best_delta, best_value = point.delta, point.modularity
    if best_delta is None:
        return report.points[-1].delta
    return best_delta


def _largest_cc_jump(report: SweepReport) -> Optional[Tuple[float, float]]:
    """(increase, higher delta) of the largest consecutive growth of the largest CC, scanning delta downward."""
    points = report.points
    best = None
    for i in range(len(points) - 2, -1, -1):
        higher, lower = points[i + 1], points[i]
        increase = lower.norm_largest_cc - higher.norm_largest_cc
        if best is None or increase > best[0]:
            best = (increase, higher.delta)
    return best


def _select(
    report: SweepReport,
    rule: Union[SelectionRule, str],
    jump_factor: float,
) -> Tuple[float, SelectionRule]:
    if len(report.points) < 2:
        raise ValidationError("threshold selection needs at least two sweep points")
    rule = SelectionRule(rule)
    if rule is SelectionRule.LARGEST_CC_JUMP:
        jump = _largest_cc_jump(report)
        if jump is not None and jump[0] >= jump_factor - _JUMP_TOLERANCE:
            logger.debug(f"largest-CC jump of {jump[0]:.4f} below delta={jump[1]}")
            return jump[1], SelectionRule.LARGEST_CC_JUMP
        logger.debug("no largest-CC jump reaches the jump factor; using max modularity")
    return _max_modularity_delta(report), SelectionRule.MAX_MODULARITY


def select_threshold(
    report: SweepReport,
    rule: Union[SelectionRule, str] = SelectionRule.LARGEST_CC_JUMP,
    jump_factor: float = DEFAULT_JUMP_FACTOR,
) -> float:
    """Pick a grid threshold.

    The jump rule scans thresholds from high to low and finds the largest
    consecutive increase of the normalized largest-component size. When it
    reaches jump_factor, the threshold just before the collapse (the higher
    delta of the pair) is returned. Otherwise, and for the modularity rule,
    the threshold of maximum modularity is returned, ties going to the larger
    threshold.
    """
    return _select(report, rule, jump_factor)[0]


def with_selection(
    report: SweepReport,
    rule: Union[SelectionRule, str] = SelectionRule.LARGEST_CC_JUMP,
    jump_factor: float = DEFAULT_JUMP_FACTOR,
) -> SweepReport:
    """Copy of report carrying the selected threshold and the rule that produced it.

    A jump request that falls back to max modularity is recorded as modularity.
    """
    selected, applied = _select(report, rule, jump_factor)
    return report.model_copy(update={"selected_delta": selected, "selection_rule": applied.value})
