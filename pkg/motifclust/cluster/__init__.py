"""Threshold sparsification and connected-component clustering."""

from .components import connected_components
from .pipeline import ClusterResult, cluster, cluster_with_stats, compute_scores
from .sparsify import keep_mask, sparsify

__all__ = [
    "sparsify",
    "keep_mask",
    "connected_components",
    "cluster",
    "cluster_with_stats",
    "compute_scores",
    "ClusterResult",
]
