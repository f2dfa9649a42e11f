"""R-MAT recursive-matrix graph generator."""

from __future__ import annotations

from typing import Any, Dict, Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from ..core.exceptions import ValidationError
from ..graph.graph import Graph
from ..utils.logger import get_logger
from ..utils.parallel import fixed_ranges, parallel_map

logger = get_logger("generators.rmat")

EDGE_CHUNK = 1 << 20
DEFAULT_EDGE_FACTOR = 16.0

DENSITY_REGIMES = ("very_sparse", "sparse", "dense")


class RmatParams(BaseModel):
    """R-MAT parameters; the requested edge count is `edges` if set, else edge_factor * 2^scale."""

    scale: int = Field(ge=1, le=40)
    edges: Optional[int] = Field(default=None, ge=0)
    edge_factor: float = Field(default=DEFAULT_EDGE_FACTOR, ge=0.0)
    a11: float = Field(default=0.45, ge=0.0, le=1.0)
    a12: float = Field(default=0.15, ge=0.0, le=1.0)
    a21: float = Field(default=0.15, ge=0.0, le=1.0)
    a22: float = Field(default=0.25, ge=0.0, le=1.0)
    seed: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _check_quadrants(self) -> "RmatParams":
        total = self.a11 + self.a12 + self.a21 + self.a22
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"quadrant probabilities sum to {total!r}, expected 1")
        return self

    @classmethod
    def for_density(cls, scale: int, regime: str, seed: int = 0, **kwargs: Any) -> "RmatParams":
        """very_sparse: m = 5n, sparse: m = 50n, dense: m = n^1.5."""
        n = 1 << scale
        if regime == "very_sparse":
            edges = 5 * n
        elif regime == "sparse":
            edges = 50 * n
        elif regime == "dense":
            edges = int(round(n ** 1.5))
        else:
            raise ValidationError(f"unknown density regime {regime!r}; expected one of {DENSITY_REGIMES}")
        return cls(scale=scale, edges=edges, seed=seed, **kwargs)

    @property
    def node_count(self) -> int:
        return 1 << self.scale

    @property
    def requested_edges(self) -> int:
        if self.edges is not None:
            return self.edges
        return int(self.edge_factor * self.node_count)

    @property
    def quadrants(self) -> Tuple[float, float, float, float]:
        return (self.a11, self.a12, self.a21, self.a22)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return self.model_dump()


def _rmat_chunk(
    params: RmatParams, count: int, seed: np.random.SeedSequence
) -> Tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    c1 = params.a11
    c2 = c1 + params.a12
    c3 = c2 + params.a21
    src = np.zeros(count, dtype=np.int64)
    dst = np.zeros(count, dtype=np.int64)
    for level in range(params.scale):
        draw = rng.random(count)
        # quadrants in row-major order: a11 (0,0), a12 (0,1), a21 (1,0), a22 (1,1)
        row_bit = draw >= c2
        col_bit = ((draw >= c1) & (draw < c2)) | (draw >= c3)
        bit = np.int64(1) << (params.scale - 1 - level)
        src |= row_bit.astype(np.int64) * bit
        dst |= col_bit.astype(np.int64) * bit
    return src, dst


def gen_rmat(params: RmatParams) -> Graph:
    """Sample requested_edges R-MAT edges; self-loops and duplicates are dropped afterwards."""
    requested = params.requested_edges
    ranges = fixed_ranges(requested, EDGE_CHUNK)
    streams = np.random.SeedSequence(params.seed).spawn(len(ranges))
    parts = parallel_map(
        lambda task: _rmat_chunk(params, task[0][1] - task[0][0], task[1]),
        list(zip(ranges, streams)),
    )
    if parts:
        src = np.concatenate([part[0] for part in parts])
        dst = np.concatenate([part[1] for part in parts])
    else:
        src = dst = np.zeros(0, dtype=np.int64)
    graph = Graph.from_edges(params.node_count, src, dst)
    if requested and graph.edge_count < 0.95 * requested:
        logger.warning(
            f"R-MAT realized {graph.edge_count} of {requested} requested edges "
            f"({graph.edge_count / requested:.1%}) after dropping duplicates and self-loops"
        )
    logger.debug(f"R-MAT scale={params.scale} requested={requested} realized={graph.edge_count}")
    return graph
