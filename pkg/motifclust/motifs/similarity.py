"""Edge similarity functions built on per-edge motif statistics."""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Optional, Union

import numpy as np

from ..core.exceptions import ValidationError
from ..core.types import SimilarityKind
from ..graph.graph import Graph
from ..graph.io import NodeIdMap, open_output
from .counting import EdgeMotifStats


@dataclass(frozen=True)
class EdgeScores:
    """One similarity value per edge, aligned to EdgeId. Higher means more intra-community."""

    kind: SimilarityKind
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ValidationError("scores must be one-dimensional")
        if not np.all(np.isfinite(values)):
            raise ValidationError(f"{self.kind.value} scores contain non-finite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def min(self) -> Optional[float]:
        return float(self.values.min()) if len(self) else None

    def max(self) -> Optional[float]:
        return float(self.values.max()) if len(self) else None


def _tw(stats: EdgeMotifStats) -> np.ndarray:
    return (stats.triangles - stats.wedges).astype(np.float64)


def _tectonic(stats: EdgeMotifStats) -> np.ndarray:
    return stats.triangles / stats.degree_sum.astype(np.float64)


def _jaccard(stats: EdgeMotifStats) -> np.ndarray:
    return stats.triangles / (stats.degree_sum - stats.triangles).astype(np.float64)


def _k3(stats: EdgeMotifStats) -> np.ndarray:
    return stats.triangles.astype(np.float64)


def _k4(stats: EdgeMotifStats) -> np.ndarray:
    if stats.k4 is None:
        raise ValidationError("K4 scores need motif stats counted with with_k4=True")
    return stats.k4.astype(np.float64)


def _effres(stats: EdgeMotifStats) -> np.ndarray:
    # negated upper bound 2 / (2 + t) on the effective resistance
    return -2.0 / (2.0 + stats.triangles.astype(np.float64))


_SCORERS: Dict[SimilarityKind, Callable[[EdgeMotifStats], np.ndarray]] = {
    SimilarityKind.TW: _tw,
    SimilarityKind.TECTONIC: _tectonic,
    SimilarityKind.JACCARD: _jaccard,
    SimilarityKind.K3: _k3,
    SimilarityKind.K4: _k4,
    SimilarityKind.EFFRES: _effres,
}


def score_edges(g: Graph, stats: EdgeMotifStats, kind: Union[SimilarityKind, str]) -> EdgeScores:
    """Apply a motif-based similarity function to every edge of g."""
    kind = SimilarityKind.parse(kind)
    if kind is SimilarityKind.BC:
        raise ValidationError("betweenness scores come from edge_betweenness_scores, not motif stats")
    if stats.edge_count != g.edge_count:
        raise ValidationError(
            f"motif stats cover {stats.edge_count} edges, graph has {g.edge_count}"
        )
    return EdgeScores(kind=kind, values=_SCORERS[kind](stats))


def jaccard_to_tectonic(delta: float) -> float:
    """Tectonic threshold removing exactly the edges Jaccard threshold delta removes.

    Short decimal thresholds (0.05, 0.1, ...) are mapped in exact rational
    arithmetic, so an edge sitting exactly on the Jaccard threshold also sits
    exactly on the Tectonic one.
    """
    exact = Fraction(delta).limit_denominator(1_000_000)
    if float(exact) == delta:
        return float(exact / (1 + exact))
    return delta / (1.0 + delta)


def tectonic_to_jaccard(delta: float) -> float:
    """Inverse of jaccard_to_tectonic on [0, 0.5)."""
    if delta >= 1.0:
        raise ValidationError("tectonic threshold must be < 1")
    return delta / (1.0 - delta)


def write_scores_csv(
    path: Union[str, os.PathLike],
    g: Graph,
    scores: EdgeScores,
    id_map: Optional[NodeIdMap] = None,
) -> None:
    """Write 'u,v,score' rows in canonical edge order with 17 significant digits."""
    if len(scores) != g.edge_count:
        raise ValidationError(f"{len(scores)} scores for {g.edge_count} edges")
    us, vs = g.canonical_edges()
    if id_map is not None:
        us, vs = id_map.to_label(us), id_map.to_label(vs)
    with open_output(path) as handle:
        handle.write("u,v,score\n")
        for u, v, value in zip(us.tolist(), vs.tolist(), scores.values.tolist()):
            handle.write(f"{u},{v},{value:.17g}\n")
