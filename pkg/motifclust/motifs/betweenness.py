"""Exact edge betweenness (Brandes dependency accumulation), negated as a similarity."""

from __future__ import annotations

from collections import deque
from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..core.exceptions import SizeLimitError
from ..core.types import SimilarityKind
from ..graph.graph import Graph
from ..utils.config import get_default_bc_node_limit
from ..utils.logger import get_logger
from ..utils.parallel import chunked, process_map
from .similarity import EdgeScores

logger = get_logger("motifs.betweenness")

SOURCE_CHUNK = 64

# offsets, neighbors, slot edge ids (as lists), node count, edge count
TraversalState = Tuple[List[int], List[int], List[int], int, int]


def _accumulate_sources(state: TraversalState, sources: Sequence[int]) -> np.ndarray:
    """Sum of pair dependencies on every edge over shortest paths from the given sources."""
    offsets, neighbors, slot_edges, node_count, edge_count = state
    edge_bc = [0.0] * edge_count
    for source in sources:
        dist = [-1] * node_count
        sigma = [0] * node_count
        preds: List[List[tuple]] = [[] for _ in range(node_count)]
        order: List[int] = []

        dist[source] = 0
        sigma[source] = 1
        queue = deque([source])
        while queue:
            v = queue.popleft()
            order.append(v)
            next_dist = dist[v] + 1
            for slot in range(offsets[v], offsets[v + 1]):
                w = neighbors[slot]
                if dist[w] < 0:
                    dist[w] = next_dist
                    queue.append(w)
                if dist[w] == next_dist:
                    sigma[w] += sigma[v]
                    preds[w].append((v, slot_edges[slot]))

        delta = [0.0] * node_count
        while order:
            w = order.pop()
            coefficient = (1.0 + delta[w]) / sigma[w]
            for v, edge in preds[w]:
                contribution = sigma[v] * coefficient
                edge_bc[edge] += contribution
                delta[v] += contribution
    return np.asarray(edge_bc, dtype=np.float64)


def edge_betweenness(g: Graph, node_limit: Optional[int] = None) -> np.ndarray:
    """Unnormalized edge betweenness; each unordered source-target pair counted once."""
    limit = node_limit if node_limit is not None else get_default_bc_node_limit()
    if g.node_count > limit:
        raise SizeLimitError(g.node_count, limit)
    if g.edge_count == 0:
        return np.zeros(0, dtype=np.float64)

    state: TraversalState = (
        g.offsets.tolist(),
        g.neighbors.tolist(),
        g.slot_edge_ids().tolist(),
        g.node_count,
        g.edge_count,
    )
    chunks = chunked(list(range(g.node_count)), SOURCE_CHUNK)
    partials = process_map(_accumulate_sources, chunks, state)
    total = np.zeros(g.edge_count, dtype=np.float64)
    for partial in partials:
        total += partial
    # every pair is reached once from each endpoint
    total /= 2.0
    logger.debug(f"edge betweenness over {g.node_count} sources, max={float(total.max()):.6g}")
    return total


def edge_betweenness_scores(g: Graph, node_limit: Optional[int] = None) -> EdgeScores:
    """EdgeScores holding -BC(e) for every edge."""
    return EdgeScores(kind=SimilarityKind.BC, values=-edge_betweenness(g, node_limit))
