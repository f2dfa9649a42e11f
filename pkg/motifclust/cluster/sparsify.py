"""Threshold sparsification."""

from __future__ import annotations

import numpy as np

from ..core.exceptions import ValidationError
from ..graph.graph import Graph
from ..motifs.similarity import EdgeScores


def keep_mask(scores: EdgeScores, delta: float) -> np.ndarray:
    """Edges that survive threshold delta (an edge is removed only when its score < delta)."""
    return ~(scores.values < delta)


def sparsify(g: Graph, scores: EdgeScores, delta: float) -> Graph:
    """Subgraph of g keeping exactly the edges with score >= delta; the node set is unchanged."""
    if len(scores) != g.edge_count:
        raise ValidationError(f"{len(scores)} scores for {g.edge_count} edges")
    return g.subgraph_edges(keep_mask(scores, delta))
