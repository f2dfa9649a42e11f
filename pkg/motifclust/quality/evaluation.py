"""Precision / recall / F1 against possibly-overlapping groundtruth communities.

Every predicted cluster S_i is matched to the groundtruth community C* with the
largest Jaccard similarity (lowest groundtruth index on ties). With
p_i = |C* & S_i| / |S_i| and r_i = |C* & S_i| / |C*|, the reported precision,
recall and F1 are averages of the per-cluster values weighted by |S_i|.
A cluster that meets no groundtruth community scores p_i = r_i = 0.
"""

from __future__ import annotations

import json
from typing import Any, Dict, List, Optional, Union

import numpy as np
from pydantic import BaseModel, Field

from ..core.exceptions import ValidationError
from ..core.types import CommunitySet, Partition
from ..graph.graph import Graph
from ..utils.logger import get_logger

logger = get_logger("quality.evaluation")

CSV_SUMMARY_HEADER = "precision,recall,f1,clusters,singletons"


class ClusterMatch(BaseModel):
    """Best groundtruth match of one predicted cluster."""

    id: int
    matched: Optional[int] = None
    jaccard: float = 0.0
    p: float = 0.0
    r: float = 0.0
    size: int


class EvalReport(BaseModel):
    """Size-weighted precision, recall and F1 of a predicted clustering."""

    precision: float = Field(ge=0.0, le=1.0)
    recall: float = Field(ge=0.0, le=1.0)
    f1: float = Field(ge=0.0, le=1.0)
    clusters: List[ClusterMatch] = Field(default_factory=list)
    cluster_count: int = 0
    singleton_count: int = 0
    unknown_labels: int = 0
    unknown_pred_labels: int = 0

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)

    def csv_summary(self) -> str:
        return (
            f"{self.precision:.17g},{self.recall:.17g},{self.f1:.17g},"
            f"{self.cluster_count},{self.singleton_count}"
        )


def _as_community_set(pred: Union[Partition, CommunitySet], include_singletons: bool) -> CommunitySet:
    if isinstance(pred, Partition):
        return CommunitySet.from_partition(pred, include_singletons=include_singletons)
    if not pred.is_disjoint():
        raise ValidationError("predicted communities must be disjoint")
    if include_singletons:
        return pred
    return CommunitySet([c for c in pred if c.shape[0] > 1])


def evaluate(
    pred: Union[Partition, CommunitySet],
    truth: CommunitySet,
    include_singletons: bool = True,
) -> EvalReport:
    """Match every predicted cluster to its best groundtruth community and aggregate."""
    predicted = _as_community_set(pred, include_singletons)
    if len(predicted) == 0:
        raise ValidationError("prediction has no clusters")
    if len(truth) == 0:
        raise ValidationError("groundtruth has no communities")

    node_count = max(predicted.max_node_id(), truth.max_node_id()) + 1
    if isinstance(pred, Partition):
        node_count = max(node_count, pred.node_count)
    pred_matrix = predicted.membership_matrix(node_count)
    truth_matrix = truth.membership_matrix(node_count)
    pred_sizes = predicted.sizes()
    truth_sizes = truth.sizes()

    overlap = (pred_matrix.T @ truth_matrix).tocoo()
    rows = overlap.row.astype(np.int64)
    cols = overlap.col.astype(np.int64)
    shared = overlap.data.astype(np.int64)
    keep = shared > 0
    rows, cols, shared = rows[keep], cols[keep], shared[keep]
    jaccard = shared / (pred_sizes[rows] + truth_sizes[cols] - shared).astype(np.float64)

    # best match per row: highest Jaccard, then lowest groundtruth index
    order = np.lexsort((cols, -jaccard, rows))
    rows, cols, shared, jaccard = rows[order], cols[order], shared[order], jaccard[order]
    first = np.concatenate(([True], rows[1:] != rows[:-1])) if rows.size else np.zeros(0, dtype=bool)

    k = len(predicted)
    matched = np.full(k, -1, dtype=np.int64)
    best_jaccard = np.zeros(k, dtype=np.float64)
    best_shared = np.zeros(k, dtype=np.int64)
    matched[rows[first]] = cols[first]
    best_jaccard[rows[first]] = jaccard[first]
    best_shared[rows[first]] = shared[first]

    has_match = matched >= 0
    precision = np.where(has_match, best_shared / pred_sizes.astype(np.float64), 0.0)
    matched_sizes = np.where(has_match, truth_sizes[np.maximum(matched, 0)], 1)
    recall = np.where(has_match, best_shared / matched_sizes.astype(np.float64), 0.0)
    denominator = precision + recall
    f1 = np.divide(
        2.0 * precision * recall,
        denominator,
        out=np.zeros(k, dtype=np.float64),
        where=denominator > 0,
    )

    weights = pred_sizes.astype(np.float64)
    total = float(weights.sum())
    clusters = [
        ClusterMatch(
            id=i,
            matched=int(matched[i]) if has_match[i] else None,
            jaccard=float(best_jaccard[i]),
            p=float(precision[i]),
            r=float(recall[i]),
            size=int(pred_sizes[i]),
        )
        for i in range(k)
    ]
    report = EvalReport(
        precision=min(float(np.dot(precision, weights)) / total, 1.0),
        recall=min(float(np.dot(recall, weights)) / total, 1.0),
        f1=min(float(np.dot(f1, weights)) / total, 1.0),
        clusters=clusters,
        cluster_count=k,
        singleton_count=int(np.count_nonzero(pred_sizes == 1)),
        unknown_labels=truth.unknown_labels,
        unknown_pred_labels=0 if isinstance(pred, Partition) else pred.unknown_labels,
    )
    logger.debug(
        f"evaluated {k} clusters against {len(truth)} communities: "
        f"P={report.precision:.4f} R={report.recall:.4f} F1={report.f1:.4f}"
    )
    return report


class DensityBin(BaseModel):
    """Half-open bin [low, high) of internal edge density; the last bin is closed."""

    low: float
    high: float
    count: int


def community_densities(g: Graph, truth: CommunitySet) -> np.ndarray:
    """Internal edge density of every community with at least two members."""
    sizes = truth.sizes()
    if len(truth) == 0:
        return np.zeros(0, dtype=np.float64)
    if truth.max_node_id() >= g.node_count:
        raise ValidationError(
            f"groundtruth node id {truth.max_node_id()} outside graph of {g.node_count} nodes"
        )
    membership = truth.membership_matrix(g.node_count)
    us, vs = g.canonical_edges()
    if g.edge_count:
        internal = np.asarray(membership[us].multiply(membership[vs]).sum(axis=0)).ravel()
    else:
        internal = np.zeros(len(truth), dtype=np.int64)
    eligible = sizes >= 2
    pairs = sizes[eligible] * (sizes[eligible] - 1) // 2
    return internal[eligible] / pairs.astype(np.float64)


def density_histogram(g: Graph, truth: CommunitySet, bins: int = 10) -> List[DensityBin]:
    """Histogram of community internal densities over [0, 1] with uniform bins."""
    if bins < 1:
        raise ValidationError(f"bins must be >= 1, got {bins}")
    densities = community_densities(g, truth)
    index = np.minimum(np.floor(densities * bins).astype(np.int64), bins - 1)
    counts = np.bincount(index, minlength=bins)
    return [
        DensityBin(low=i / bins, high=(i + 1) / bins, count=int(counts[i]))
        for i in range(bins)
    ]
