"""Per-edge motif statistics: triangles, wedges, degree sums and 4-clique participation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from ..graph.graph import Graph
from ..utils.logger import get_logger
from ..utils.parallel import balanced_ranges, fixed_ranges, parallel_map, process_map

logger = get_logger("motifs.counting")

# Upper bound on intermediate product entries held by one row block.
BLOCK_WORK = 1 << 22
K4_CHUNK_EDGES = 2048

# offsets, neighbors, degrees
AdjacencyArrays = Tuple[np.ndarray, np.ndarray, np.ndarray]
# us, vs, triangles of a run of canonical edges
EdgeChunk = Tuple[np.ndarray, np.ndarray, np.ndarray]


@dataclass(frozen=True)
class EdgeMotifStats:
    """Per-edge arrays aligned to EdgeId."""

    triangles: np.ndarray
    wedges: np.ndarray
    degree_sum: np.ndarray
    k4: Optional[np.ndarray] = None

    @property
    def edge_count(self) -> int:
        return int(self.triangles.shape[0])

    @property
    def has_k4(self) -> bool:
        return self.k4 is not None

    def global_triangles(self) -> int:
        return int(self.triangles.sum()) // 3


def _block_triangles(g: Graph, bounds: Tuple[int, int]) -> np.ndarray:
    """|N(u) ∩ N(v)| for the canonical edges whose smaller endpoint lies in [lo, hi)."""
    lo, hi = bounds
    adjacency = g.to_csr()
    offsets = g.offsets
    s0, s1 = int(offsets[lo]), int(offsets[hi])
    if s1 == s0:
        return np.zeros(0, dtype=np.int64)

    n = np.int64(g.node_count)
    rows = np.repeat(np.arange(hi - lo, dtype=np.int64), np.diff(offsets[lo:hi + 1]))
    cols = g.neighbors[s0:s1].astype(np.int64)
    upper = cols > rows + lo
    slot_keys = rows[upper] * n + cols[upper]

    product = (adjacency[lo:hi] @ adjacency).tocsr()
    product.sort_indices()
    product_rows = np.repeat(np.arange(hi - lo, dtype=np.int64), np.diff(product.indptr))
    product_keys = product_rows * n + product.indices.astype(np.int64)

    counts = np.zeros(slot_keys.shape[0], dtype=np.int64)
    if product_keys.shape[0]:
        pos = np.searchsorted(product_keys, slot_keys)
        pos_clipped = np.minimum(pos, product_keys.shape[0] - 1)
        found = product_keys[pos_clipped] == slot_keys
        counts[found] = product.data[pos_clipped[found]]
    return counts


def count_triangles(g: Graph) -> np.ndarray:
    """t(u, v) for every canonical edge."""
    if g.edge_count == 0:
        return np.zeros(0, dtype=np.int64)
    adjacency = g.to_csr()
    # wedge work of row u is sum of deg(w) over w in N(u)
    work = adjacency @ g.degrees.astype(np.int64)
    blocks = balanced_ranges(work + g.degrees, BLOCK_WORK)
    parts = parallel_map(lambda bounds: _block_triangles(g, bounds), blocks)
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def _k4_for_edges(arrays: AdjacencyArrays, chunk: EdgeChunk) -> np.ndarray:
    offsets, neighbors, degrees = arrays
    us, vs, triangles = chunk
    result = np.zeros(us.shape[0], dtype=np.int64)
    for i in np.flatnonzero(triangles >= 2):
        u, v = int(us[i]), int(vs[i])
        common = np.intersect1d(
            neighbors[offsets[u]:offsets[u + 1]],
            neighbors[offsets[v]:offsets[v + 1]],
            assume_unique=True,
        )
        lens = degrees[common]
        starts = offsets[common]
        total = int(lens.sum())
        # positions of every neighbor slot of every common neighbor
        shift = np.repeat(starts - np.concatenate(([0], np.cumsum(lens)[:-1])), lens)
        gathered = neighbors[shift + np.arange(total)]
        pos = np.minimum(np.searchsorted(common, gathered), common.shape[0] - 1)
        result[i] = int(np.count_nonzero(common[pos] == gathered)) // 2
    return result


def count_k4(g: Graph, triangles: np.ndarray) -> np.ndarray:
    """Number of 4-cliques containing each canonical edge."""
    us, vs = g.canonical_edges()
    chunks = [
        (us[lo:hi], vs[lo:hi], triangles[lo:hi])
        for lo, hi in fixed_ranges(g.edge_count, K4_CHUNK_EDGES)
    ]
    parts: List[np.ndarray] = process_map(_k4_for_edges, chunks, (g.offsets, g.neighbors, g.degrees))
    return np.concatenate(parts) if parts else np.zeros(0, dtype=np.int64)


def count_edge_motifs(g: Graph, with_k4: bool = False) -> EdgeMotifStats:
    """Triangles, wedges, degree sums (and optionally K4 counts) for every edge of g."""
    us, vs = g.canonical_edges()
    degrees = g.degrees.astype(np.int64)
    triangles = count_triangles(g)
    degree_sum = degrees[us] + degrees[vs]
    wedges = degree_sum - 2 * triangles - 2
    k4 = count_k4(g, triangles) if with_k4 else None
    logger.debug(
        f"motif counts: m={g.edge_count} triangles={int(triangles.sum()) // 3}"
        + (f" k4_edge_total={int(k4.sum())}" if k4 is not None else "")
    )
    for values in (triangles, wedges, degree_sum) + ((k4,) if k4 is not None else ()):
        values.setflags(write=False)
    return EdgeMotifStats(triangles=triangles, wedges=wedges, degree_sum=degree_sum, k4=k4)
