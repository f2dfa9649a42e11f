"""Motif-based community detection: score, sparsify, take connected components."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Union

from ..core.types import Partition, SimilarityKind
from ..graph.graph import Graph
from ..motifs.betweenness import edge_betweenness_scores
from ..motifs.counting import count_edge_motifs
from ..motifs.similarity import EdgeScores, score_edges
from ..utils.logger import get_logger
from .components import connected_components
from .sparsify import sparsify

logger = get_logger("cluster.pipeline")


@dataclass(frozen=True)
class ClusterResult:
    """Partition plus the bookkeeping reported by the cluster command."""

    partition: Partition
    scores: EdgeScores
    kept_edges: int
    seconds: float


def compute_scores(
    g: Graph,
    kind: Union[SimilarityKind, str],
    node_limit: Optional[int] = None,
) -> EdgeScores:
    """Edge scores of the given kind; motif stats are counted only as far as the kind needs."""
    kind = SimilarityKind.parse(kind)
    if kind is SimilarityKind.BC:
        return edge_betweenness_scores(g, node_limit=node_limit)
    stats = count_edge_motifs(g, with_k4=kind is SimilarityKind.K4)
    return score_edges(g, stats, kind)


def cluster_with_stats(
    g: Graph,
    kind: Union[SimilarityKind, str],
    delta: float,
    node_limit: Optional[int] = None,
) -> ClusterResult:
    start = time.perf_counter()
    scores = compute_scores(g, kind, node_limit=node_limit)
    sparse_graph = sparsify(g, scores, delta)
    partition = connected_components(sparse_graph)
    seconds = time.perf_counter() - start
    logger.info(
        f"cluster kind={scores.kind.value} delta={delta}: kept {sparse_graph.edge_count}/{g.edge_count} "
        f"edges, {partition.community_count} communities in {seconds:.3f}s"
    )
    return ClusterResult(
        partition=partition,
        scores=scores,
        kept_edges=sparse_graph.edge_count,
        seconds=seconds,
    )


def cluster(
    g: Graph,
    kind: Union[SimilarityKind, str],
    delta: float,
    node_limit: Optional[int] = None,
) -> Partition:
    """Remove every edge with similarity below delta and return the connected components."""
    return cluster_with_stats(g, kind, delta, node_limit=node_limit).partition
