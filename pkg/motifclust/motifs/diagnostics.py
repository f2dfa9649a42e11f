"""Groundtruth bias diagnostics: motif-cut fractions and score separation."""

from __future__ import annotations

from collections import Counter
from typing import Any, Dict, List, Optional

import numpy as np
from pydantic import BaseModel
from scipy import sparse

from ..core.exceptions import ValidationError
from ..core.types import CommunitySet
from ..graph.graph import Graph
from ..utils.logger import get_logger
from ..utils.parallel import fixed_ranges
from .counting import count_triangles
from .similarity import EdgeScores

logger = get_logger("motifs.diagnostics")

TRIANGLE_CHUNK_EDGES = 4096


class MotifCutFractions(BaseModel):
    """Share of each motif class not contained in any single groundtruth community."""

    edges_cut: Optional[float] = None
    wedges_cut: Optional[float] = None
    triangles_cut: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def _check_truth(g: Graph, truth: CommunitySet) -> None:
    if len(truth) == 0:
        raise ValidationError("groundtruth community set is empty")
    if truth.max_node_id() >= g.node_count:
        raise ValidationError(
            f"groundtruth node id {truth.max_node_id()} outside graph of {g.node_count} nodes"
        )


def inside_edge_mask(g: Graph, truth: CommunitySet) -> np.ndarray:
    """True for edges whose endpoints share at least one groundtruth community."""
    us, vs = g.canonical_edges()
    if g.edge_count == 0 or len(truth) == 0:
        return np.zeros(g.edge_count, dtype=bool)
    membership = truth.membership_matrix(g.node_count)
    shared = membership[us].multiply(membership[vs]).sum(axis=1)
    return np.asarray(shared).ravel() > 0


def score_separation(g: Graph, scores: EdgeScores, truth: CommunitySet) -> Optional[float]:
    """(mean inside score - mean across score) / std of all scores, or None when undefined."""
    _check_truth(g, truth)
    if len(scores) != g.edge_count:
        raise ValidationError(f"{len(scores)} scores for {g.edge_count} edges")
    inside = inside_edge_mask(g, truth)
    if not inside.any() or inside.all():
        return None
    spread = float(np.std(scores.values))
    if spread == 0.0:
        return None
    gap = float(scores.values[inside].mean() - scores.values[~inside].mean())
    return gap / spread


def _uncut_wedges_at(g: Graph, membership: sparse.csr_matrix, center: int) -> int:
    """Uncut wedges around a center that belongs to several communities."""
    own = membership.indices[membership.indptr[center]:membership.indptr[center + 1]]
    local = membership[g.neighbors_of(center)][:, own].tocsr()
    shared: Counter = Counter()
    for row in range(local.shape[0]):
        mask = 0
        # bit j stands for the center's j-th community
        for j in local.indices[local.indptr[row]:local.indptr[row + 1]].tolist():
            mask |= 1 << j
        if mask:
            shared[mask] += 1
    values = list(shared.items())
    total = 0
    for i, (mask_a, count_a) in enumerate(values):
        total += count_a * (count_a - 1) // 2
        for mask_b, count_b in values[i + 1:]:
            if mask_a & mask_b:
                total += count_a * count_b
    return total


def _uncut_wedges(g: Graph, membership: sparse.csr_matrix) -> int:
    """Paths a-c-b (centered at c) with one community holding all three nodes."""
    per_node = np.diff(membership.indptr)
    # neighbours of each center inside each community of that center
    local = (g.to_csr() @ membership).multiply(membership).tocsr()
    rows = np.repeat(np.arange(g.node_count, dtype=np.int64), np.diff(local.indptr))
    counts = local.data.astype(np.int64)[per_node[rows] == 1]
    total = int((counts * (counts - 1) // 2).sum())
    for center in np.flatnonzero(per_node > 1).tolist():
        total += _uncut_wedges_at(g, membership, center)
    return total


def _uncut_triangles(g: Graph, membership: sparse.csr_matrix, inside: np.ndarray) -> int:
    us, vs = g.canonical_edges()
    offsets = g.offsets
    neighbors = g.neighbors
    edge_ids = np.flatnonzero(inside)
    seen = 0
    for lo, hi in fixed_ranges(edge_ids.shape[0], TRIANGLE_CHUNK_EDGES):
        chunk = edge_ids[lo:hi]
        owners: List[np.ndarray] = []
        thirds: List[np.ndarray] = []
        for row, e in enumerate(chunk.tolist()):
            u, v = int(us[e]), int(vs[e])
            common = np.intersect1d(
                neighbors[offsets[u]:offsets[u + 1]],
                neighbors[offsets[v]:offsets[v + 1]],
                assume_unique=True,
            )
            owners.append(np.full(common.shape[0], row, dtype=np.int64))
            thirds.append(common.astype(np.int64))
        owner = np.concatenate(owners)
        if owner.size == 0:
            continue
        edge_shared = membership[us[chunk]].multiply(membership[vs[chunk]]).tocsr()
        hits = edge_shared[owner].multiply(membership[np.concatenate(thirds)]).sum(axis=1)
        seen += int(np.count_nonzero(np.asarray(hits).ravel()))
    # each uncut triangle is found once from each of its three (uncut) edges
    return seen // 3


def motif_cut_fractions(g: Graph, truth: CommunitySet) -> MotifCutFractions:
    """Fractions of edges, wedges (all length-2 paths) and triangles cut by the groundtruth."""
    _check_truth(g, truth)
    membership = truth.membership_matrix(g.node_count).tocsr()
    inside = inside_edge_mask(g, truth)

    degrees = g.degrees.astype(np.int64)
    edge_total = g.edge_count
    wedge_total = int((degrees * (degrees - 1) // 2).sum())
    triangle_total = int(count_triangles(g).sum()) // 3

    edges_uncut = int(inside.sum())
    wedges_uncut = _uncut_wedges(g, membership) if wedge_total else 0
    triangles_uncut = _uncut_triangles(g, membership, inside) if triangle_total else 0

    def fraction(uncut: int, total: int) -> Optional[float]:
        return None if total == 0 else (total - uncut) / total

    result = MotifCutFractions(
        edges_cut=fraction(edges_uncut, edge_total),
        wedges_cut=fraction(wedges_uncut, wedge_total),
        triangles_cut=fraction(triangles_uncut, triangle_total),
    )
    logger.debug(f"motif cut fractions: {result.to_dict()}")
    return result
