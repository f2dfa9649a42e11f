"""Closed-form per-edge expectations under the two-block SBM.

The default expectations are per-node normalized and drop lower-order terms
(n - 2 is treated as n), which is the form used to compare TW with Tectonic
as n grows. With finite_size=True the exact expected counts for the given n
are returned instead, conditioned on the edge being present and counting the
edge itself in both endpoint degrees.

`tectonic` holds E[t] - delta * E[deg(u) + deg(v)]: positive when the edge is
expected to survive a Tectonic threshold of delta.
"""

from __future__ import annotations

from enum import Enum
from typing import Any, Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from .sbm import SbmParams


class EdgeClass(Enum):
    """Position of an edge relative to the two planted blocks."""

    INSIDE_B1 = "inside_b1"
    ACROSS = "across"


class SbmExpectation(BaseModel):
    """Expected motif statistics and scores of one edge class."""

    model_config = ConfigDict(use_enum_values=True)

    row: EdgeClass
    triangles: float
    wedges: float
    degree_sum: float
    tw: float
    tectonic: float
    delta: float
    normalized: bool = True

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def _table_rows(p1: float, p2: float, q: float, delta: float) -> Tuple[SbmExpectation, SbmExpectation]:
    inside = SbmExpectation(
        row=EdgeClass.INSIDE_B1,
        triangles=p1 * p1 + q * q,
        wedges=2.0 * (p1 * (1.0 - p1) + q * (1.0 - q)),
        degree_sum=2.0 * (p1 + q),
        tw=3.0 * p1 * p1 - 2.0 * p1 + 3.0 * q * q - 2.0 * q,
        tectonic=p1 * p1 + q * q - 2.0 * delta * (p1 + q),
        delta=delta,
    )
    across = SbmExpectation(
        row=EdgeClass.ACROSS,
        triangles=p1 * q + p2 * q,
        wedges=p1 * (1.0 - q) + p2 * (1.0 - q) + q * (1.0 - p1) + q * (1.0 - p2),
        degree_sum=p1 + p2 + 2.0 * q,
        tw=3.0 * p1 * q + 3.0 * p2 * q - p1 - p2 - 2.0 * q,
        tectonic=p1 * q + p2 * q - delta * (p1 + p2 + 2.0 * q),
        delta=delta,
    )
    return inside, across


def _exact_row(row: EdgeClass, triangles: float, degree_sum: float, delta: float) -> SbmExpectation:
    wedges = degree_sum - 2.0 * triangles - 2.0
    return SbmExpectation(
        row=row,
        triangles=triangles,
        wedges=wedges,
        degree_sum=degree_sum,
        tw=triangles - wedges,
        tectonic=triangles - delta * degree_sum,
        delta=delta,
        normalized=False,
    )


def _finite_rows(params: SbmParams, delta: float) -> Tuple[SbmExpectation, SbmExpectation]:
    n, p1, p2, q = params.n, params.p1, params.p2, params.q
    inside = _exact_row(
        EdgeClass.INSIDE_B1,
        triangles=(n - 2) * p1 * p1 + n * q * q,
        degree_sum=2.0 + 2.0 * (n - 2) * p1 + 2.0 * n * q,
        delta=delta,
    )
    across = _exact_row(
        EdgeClass.ACROSS,
        triangles=(n - 1) * (p1 * q + q * p2),
        degree_sum=2.0 + (n - 1) * (p1 + p2 + 2.0 * q),
        delta=delta,
    )
    return inside, across


def sbm_expected_scores(
    params: SbmParams, delta: float = 0.0, finite_size: bool = False
) -> Tuple[SbmExpectation, SbmExpectation]:
    """(inside-B1 expectation, across expectation) for a Tectonic threshold delta."""
    if finite_size:
        return _finite_rows(params, delta)
    return _table_rows(params.p1, params.p2, params.q, delta)


def tw_expected_gap(params: SbmParams) -> float:
    """n * (E[TW inside B1] - E[TW across]); positive when TW separates the blocks in expectation."""
    n, p1, p2, q = params.n, params.p1, params.p2, params.q
    return n * (p2 - p1) - 3.0 * n * (p1 * (q - p1) + q * (p2 - q))


class TectonicVerdict(BaseModel):
    """Open interval (low, high) of Tectonic thresholds separating the blocks in expectation."""

    feasible: bool
    low: Optional[float] = None
    high: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def _inside_bound(p: float, q: float) -> Optional[float]:
    """Largest delta keeping the expected inside score positive (exclusive); None if never positive."""
    if p + q == 0.0:
        return None
    return (p * p + q * q) / (2.0 * (p + q))


def tectonic_infeasibility_check(params: SbmParams) -> TectonicVerdict:
    """Thresholds with expected Tectonic margin > 0 inside both blocks and < 0 across.

    Uses the normalized expectations: inside a block with probability p the
    margin is p^2 + q^2 - 2 delta (p + q), across it is
    (p1 + p2) q - delta (p1 + p2 + 2q).
    """
    p1, p2, q = params.p1, params.p2, params.q
    b1 = _inside_bound(p1, q)
    b2 = _inside_bound(p2, q)
    if b1 is None or b2 is None:
        return TectonicVerdict(feasible=False)
    high = min(b1, b2)
    across_scale = p1 + p2 + 2.0 * q
    low = (p1 * q + p2 * q) / across_scale if across_scale > 0 else 0.0
    if low < high:
        return TectonicVerdict(feasible=True, low=low, high=high)
    return TectonicVerdict(feasible=False)
