"""Newman modularity with exact integer accumulation."""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np

from ..core.exceptions import ValidationError
from ..core.types import Partition
from ..graph.graph import Graph


def modularity_terms(g: Graph, p: Partition) -> Tuple[int, int]:
    """(numerator, denominator) integers with Q = numerator / denominator.

    Q = (1/2m) sum_{u,v} (A_uv - deg(u)deg(v)/2m) [c_u == c_v], taken over all
    ordered pairs including u == v, which reduces to
    (4m * intra_edges - sum_c K_c^2) / (4m^2) with K_c the degree total of c.
    """
    if p.node_count != g.node_count:
        raise ValidationError(f"partition covers {p.node_count} nodes, graph has {g.node_count}")
    m = g.edge_count
    labels = p.labels
    us, vs = g.canonical_edges()
    intra = int(np.count_nonzero(labels[us] == labels[vs]))
    degree_totals = np.zeros(g.node_count, dtype=np.int64)
    np.add.at(degree_totals, labels, g.degrees.astype(np.int64))
    squares = sum(int(k) * int(k) for k in degree_totals[degree_totals > 0].tolist())
    return 4 * m * intra - squares, 4 * m * m


def modularity(g: Graph, p: Partition) -> Optional[float]:
    """Modularity of partition p on g; None for a graph without edges."""
    if g.edge_count == 0:
        return None
    numerator, denominator = modularity_terms(g, p)
    return numerator / denominator
