"""Partition quality: modularity and groundtruth evaluation."""

from .evaluation import (
    CSV_SUMMARY_HEADER,
    ClusterMatch,
    DensityBin,
    EvalReport,
    community_densities,
    density_histogram,
    evaluate,
)
from .modularity import modularity, modularity_terms

__all__ = [
    "modularity",
    "modularity_terms",
    "evaluate",
    "EvalReport",
    "ClusterMatch",
    "CSV_SUMMARY_HEADER",
    "DensityBin",
    "community_densities",
    "density_histogram",
]
