"""Connected components with canonical (minimum member id) labels."""

from __future__ import annotations

from scipy.sparse import csgraph

from ..core.types import Partition, canonical_labels
from ..graph.graph import Graph


def connected_components(g: Graph) -> Partition:
    """labels[u] is the smallest node id reachable from u; isolated nodes are singletons."""
    if g.node_count == 0:
        return Partition.singletons(0)
    if g.edge_count == 0:
        return Partition.singletons(g.node_count)
    _, raw = csgraph.connected_components(g.to_csr(), directed=False, return_labels=True)
    return Partition(canonical_labels(raw), canonical=True)
