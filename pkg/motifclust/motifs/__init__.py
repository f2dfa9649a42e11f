"""Per-edge motif statistics and the similarity functions built on them."""

from .betweenness import edge_betweenness, edge_betweenness_scores
from .counting import EdgeMotifStats, count_edge_motifs, count_k4, count_triangles
from .diagnostics import MotifCutFractions, inside_edge_mask, motif_cut_fractions, score_separation
from .similarity import (
    EdgeScores,
    jaccard_to_tectonic,
    score_edges,
    tectonic_to_jaccard,
    write_scores_csv,
)

__all__ = [
    # Counting
    "EdgeMotifStats",
    "count_edge_motifs",
    "count_triangles",
    "count_k4",
    # Similarity
    "EdgeScores",
    "score_edges",
    "jaccard_to_tectonic",
    "tectonic_to_jaccard",
    "write_scores_csv",
    # Betweenness
    "edge_betweenness",
    "edge_betweenness_scores",
    # Diagnostics
    "MotifCutFractions",
    "inside_edge_mask",
    "motif_cut_fractions",
    "score_separation",
]
