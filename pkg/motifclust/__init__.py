# motifclust
"""motifclust - Motif-based community detection by edge-similarity sparsification."""

__version__ = "0.1.0"

# Core types
from motifclust.core.types import (
    CommunitySet,
    Partition,
    SelectionRule,
    SimilarityKind,
)
from motifclust.core.exceptions import MotifClustError

# Graph and file formats
from motifclust.graph import Graph, NodeIdMap, canonical_edges, load_communities, load_edge_list

# Motif statistics and similarity scores
from motifclust.motifs import (
    EdgeMotifStats,
    EdgeScores,
    count_edge_motifs,
    edge_betweenness_scores,
    motif_cut_fractions,
    score_edges,
    score_separation,
)

# Clustering pipeline
from motifclust.cluster import cluster, connected_components, sparsify

# Quality metrics
from motifclust.quality import EvalReport, density_histogram, evaluate, modularity

# Threshold sweeps
from motifclust.sweep import SweepPoint, SweepReport, select_threshold, sweep

# Generators and SBM expectations
from motifclust.generators import (
    RmatParams,
    SbmParams,
    gen_rmat,
    gen_sbm,
    sbm_expected_scores,
    tectonic_infeasibility_check,
    tw_expected_gap,
)

__all__ = [
    # Version
    "__version__",
    # Core Types
    "SimilarityKind",
    "SelectionRule",
    "Partition",
    "CommunitySet",
    "MotifClustError",
    # Graph
    "Graph",
    "NodeIdMap",
    "canonical_edges",
    "load_edge_list",
    "load_communities",
    # Motifs
    "EdgeMotifStats",
    "EdgeScores",
    "count_edge_motifs",
    "score_edges",
    "edge_betweenness_scores",
    "score_separation",
    "motif_cut_fractions",
    # Clustering
    "sparsify",
    "connected_components",
    "cluster",
    # Quality
    "modularity",
    "evaluate",
    "EvalReport",
    "density_histogram",
    # Sweeps
    "sweep",
    "select_threshold",
    "SweepPoint",
    "SweepReport",
    # Generators
    "SbmParams",
    "RmatParams",
    "gen_sbm",
    "gen_rmat",
    "sbm_expected_scores",
    "tw_expected_gap",
    "tectonic_infeasibility_check",
]
