"""Threshold sweeps over the sparsify-and-components pipeline."""

from __future__ import annotations

import io
import os
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from ..cluster.components import connected_components
from ..cluster.pipeline import compute_scores
from ..cluster.sparsify import sparsify
from ..core.exceptions import ValidationError
from ..core.types import CommunitySet, SelectionRule, SimilarityKind
from ..graph.graph import Graph
from ..graph.io import open_output
from ..motifs.similarity import EdgeScores
from ..quality.evaluation import evaluate
from ..quality.modularity import modularity
from ..utils.logger import get_logger
from ..utils.parallel import parallel_map

logger = get_logger("sweep.sweep")

# (start, end, step) per kind
DEFAULT_GRIDS: Dict[SimilarityKind, Tuple[float, float, float]] = {
    SimilarityKind.TW: (-30.0, 0.0, 2.0),
    SimilarityKind.TECTONIC: (0.0, 0.3, 0.02),
    SimilarityKind.K3: (0.0, 15.0, 1.0),
}


class SweepPoint(BaseModel):
    """Normalized community statistics at one threshold."""

    delta: float
    norm_cc: float = Field(ge=0.0, le=1.0)
    norm_edges: float = Field(ge=0.0, le=1.0)
    norm_largest_cc: float = Field(ge=0.0, le=1.0)
    modularity: Optional[float] = None
    f1: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


class SweepReport(BaseModel):
    """Sweep points in ascending delta order plus the selected threshold, once chosen."""

    model_config = ConfigDict(use_enum_values=True)

    kind: SimilarityKind
    points: List[SweepPoint] = Field(default_factory=list)
    selected_delta: Optional[float] = None
    selection_rule: Optional[SelectionRule] = None

    @property
    def deltas(self) -> List[float]:
        return [point.delta for point in self.points]

    @property
    def has_f1(self) -> bool:
        return any(point.f1 is not None for point in self.points)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def threshold_grid(start: float, end: float, step: float) -> List[float]:
    """start, start + step, ... while below end - step / 2 (end itself excluded)."""
    if step <= 0:
        raise ValidationError(f"step must be > 0, got {step}")
    if start >= end:
        raise ValidationError(f"start ({start}) must be below end ({end})")
    grid: List[float] = []
    limit = end - step / 2.0
    i = 0
    while True:
        delta = round(start + i * step, 12)
        if not delta < limit:
            break
        grid.append(delta)
        i += 1
    if not grid:
        raise ValidationError(f"grid ({start}, {end}, {step}) has no thresholds")
    return grid


def default_grid(kind: Union[SimilarityKind, str]) -> Tuple[float, float, float]:
    kind = SimilarityKind.parse(kind)
    if kind not in DEFAULT_GRIDS:
        raise ValidationError(f"no default grid for {kind.value}; pass start, end and step")
    return DEFAULT_GRIDS[kind]


def sweep_point(
    g: Graph,
    scores: EdgeScores,
    delta: float,
    truth: Optional[CommunitySet] = None,
    include_singletons: bool = True,
) -> SweepPoint:
    sparse_graph = sparsify(g, scores, delta)
    partition = connected_components(sparse_graph)
    n = g.node_count
    f1 = None
    if truth is not None:
        f1 = evaluate(partition, truth, include_singletons=include_singletons).f1
    return SweepPoint(
        delta=delta,
        norm_cc=partition.community_count / n,
        norm_edges=sparse_graph.edge_count / g.edge_count if g.edge_count else 1.0,
        norm_largest_cc=partition.largest_size() / n,
        modularity=modularity(g, partition),
        f1=f1,
    )


def sweep_scores(
    g: Graph,
    scores: EdgeScores,
    deltas: List[float],
    truth: Optional[CommunitySet] = None,
    include_singletons: bool = True,
) -> SweepReport:
    """Sweep precomputed scores over the given thresholds."""
    if g.node_count == 0:
        raise ValidationError("cannot sweep a graph without nodes")
    if not deltas:
        raise ValidationError("threshold grid is empty")
    ordered = sorted(deltas)
    points = parallel_map(
        lambda delta: sweep_point(g, scores, delta, truth, include_singletons),
        ordered,
    )
    logger.info(f"swept {scores.kind.value} over {len(points)} thresholds")
    return SweepReport(kind=scores.kind, points=points)


def sweep(
    g: Graph,
    kind: Union[SimilarityKind, str],
    start: float,
    end: float,
    step: float,
    truth: Optional[CommunitySet] = None,
    node_limit: Optional[int] = None,
    include_singletons: bool = True,
) -> SweepReport:
    """Score once, then sparsify and take components at every grid threshold."""
    grid = threshold_grid(start, end, step)
    scores = compute_scores(g, kind, node_limit=node_limit)
    return sweep_scores(g, scores, grid, truth=truth, include_singletons=include_singletons)


def _fmt(value: Optional[float]) -> str:
    return "" if value is None else repr(float(value))


def format_sweep_csv(report: SweepReport) -> str:
    """CSV text: one row per point, then the selection comment when a threshold was selected."""
    buffer = io.StringIO()
    columns = ["delta", "norm_cc", "norm_edges", "norm_largest_cc", "modularity"]
    with_f1 = report.has_f1
    if with_f1:
        columns.append("f1")
    buffer.write(",".join(columns) + "\n")
    for point in report.points:
        row = [point.delta, point.norm_cc, point.norm_edges, point.norm_largest_cc, point.modularity]
        if with_f1:
            row.append(point.f1)
        buffer.write(",".join(_fmt(value) for value in row) + "\n")
    if report.selected_delta is not None:
        rule = SelectionRule(report.selection_rule).value if report.selection_rule else ""
        buffer.write(f"# selected={_fmt(report.selected_delta)} rule={rule}\n")
    return buffer.getvalue()


def write_sweep_csv(path: Union[str, os.PathLike], report: SweepReport) -> None:
    with open_output(path) as handle:
        handle.write(format_sweep_csv(report))
