"""Two-block stochastic block model.

Block B1 holds node ids 0..n-1 and block B2 holds n..2n-1. Pairs inside B1
appear with probability p1, inside B2 with p2, and across blocks with q. Work
is split into fixed pair ranges, each drawing from its own stream spawned from
the seed, so the graph depends on the parameters alone.
"""

from __future__ import annotations

from typing import Any, Dict, List, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..graph.graph import Graph
from ..utils.logger import get_logger
from ..utils.parallel import balanced_ranges, fixed_ranges, parallel_map

logger = get_logger("generators.sbm")

# Above this many nodes pairs are skip-sampled instead of enumerated.
DIRECT_SAMPLING_MAX_NODES = 10_000
DIRECT_CHUNK_PAIRS = 1 << 20
SKIP_CHUNK_PAIRS = 1 << 24


class SbmParams(BaseModel):
    """Parameters of the two-block SBM."""

    n: int = Field(ge=0, description="nodes per block")
    p1: float = Field(ge=0.0, le=1.0)
    p2: float = Field(ge=0.0, le=1.0)
    q: float = Field(ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _warn_unassortative(self) -> "SbmParams":
        if not self.q < min(self.p1, self.p2):
            logger.warning(
                f"SBM parameters outside q < min(p1, p2): p1={self.p1} p2={self.p2} q={self.q}"
            )
        return self

    @property
    def node_count(self) -> int:
        return 2 * self.n

    def block_of(self, nodes: np.ndarray) -> np.ndarray:
        """0 for B1, 1 for B2."""
        return (np.asarray(nodes) >= self.n).astype(np.int64)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def _direct_chunk(
    params: SbmParams, bounds: Tuple[int, int], seed: np.random.SeedSequence
) -> Tuple[np.ndarray, np.ndarray]:
    """Sample every pair (u, v), u < v, with u in the row range."""
    lo, hi = bounds
    total_nodes = params.node_count
    rows = np.arange(lo, hi, dtype=np.int64)
    lengths = total_nodes - 1 - rows
    us = np.repeat(rows, lengths)
    starts = np.concatenate(([0], np.cumsum(lengths)[:-1]))
    vs = np.arange(us.shape[0], dtype=np.int64) - np.repeat(starts, lengths) + np.repeat(rows + 1, lengths)

    u_block = us >= params.n
    v_block = vs >= params.n
    prob = np.where(u_block != v_block, params.q, np.where(u_block, params.p2, params.p1))
    rng = np.random.default_rng(seed)
    keep = rng.random(us.shape[0]) < prob
    return us[keep], vs[keep]


def _skip_positions(rng: np.random.Generator, lo: int, hi: int, p: float) -> np.ndarray:
    """Indices in [lo, hi) kept independently with probability p, via geometric gaps."""
    if p <= 0.0 or hi <= lo:
        return np.zeros(0, dtype=np.int64)
    span = hi - lo
    batch = int(span * p * 1.1) + 64
    positions: List[np.ndarray] = []
    current = lo - 1
    while current < hi:
        gaps = rng.geometric(p, size=batch).astype(np.int64)
        steps = current + np.cumsum(gaps)
        positions.append(steps[steps < hi])
        current = int(steps[-1])
    return np.concatenate(positions)


def _triangle_pairs(index: np.ndarray, size: int, base: int) -> Tuple[np.ndarray, np.ndarray]:
    """Map lexicographic indices of pairs u < v over `size` nodes to node ids offset by base."""
    rows = np.arange(size, dtype=np.int64)
    row_starts = rows * (2 * size - rows - 1) // 2
    us = np.searchsorted(row_starts, index, side="right") - 1
    vs = index - row_starts[us] + us + 1
    return us + base, vs + base


def _skip_chunk(
    params: SbmParams, task: Tuple[str, int, int], seed: np.random.SeedSequence
) -> Tuple[np.ndarray, np.ndarray]:
    region, lo, hi = task
    rng = np.random.default_rng(seed)
    n = params.n
    if region == "across":
        index = _skip_positions(rng, lo, hi, params.q)
        return index // n, n + index % n
    p = params.p1 if region == "b1" else params.p2
    index = _skip_positions(rng, lo, hi, p)
    return _triangle_pairs(index, n, 0 if region == "b1" else n)


def gen_sbm(params: SbmParams) -> Graph:
    """Sample a two-block SBM graph on 2n nodes."""
    n = params.n
    total_nodes = params.node_count
    root = np.random.SeedSequence(params.seed)

    if total_nodes <= DIRECT_SAMPLING_MAX_NODES:
        weights = np.maximum(total_nodes - 1 - np.arange(total_nodes, dtype=np.int64), 0)
        ranges = balanced_ranges(weights, DIRECT_CHUNK_PAIRS)
        streams = root.spawn(len(ranges))
        parts = parallel_map(
            lambda task: _direct_chunk(params, task[0], task[1]),
            list(zip(ranges, streams)),
        )
    else:
        inside_pairs = n * (n - 1) // 2
        tasks: List[Tuple[str, int, int]] = []
        for region, total in (("b1", inside_pairs), ("b2", inside_pairs), ("across", n * n)):
            tasks.extend((region, lo, hi) for lo, hi in fixed_ranges(total, SKIP_CHUNK_PAIRS))
        streams = root.spawn(len(tasks))
        parts = parallel_map(
            lambda task: _skip_chunk(params, task[0], task[1]),
            list(zip(tasks, streams)),
        )

    if parts:
        src = np.concatenate([part[0] for part in parts])
        dst = np.concatenate([part[1] for part in parts])
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    graph = Graph.from_edges(total_nodes, src, dst)
    logger.debug(f"SBM {params.to_dict()}: m={graph.edge_count}")
    return graph
