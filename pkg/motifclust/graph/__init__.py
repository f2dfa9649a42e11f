"""Graph representation and file formats."""

from .graph import Graph, canonical_edges
from .io import (
    NodeIdMap,
    load_communities,
    load_edge_list,
    read_partition,
    write_edge_list,
    write_partition,
)

__all__ = [
    "Graph",
    "canonical_edges",
    "NodeIdMap",
    "load_edge_list",
    "load_communities",
    "read_partition",
    "write_edge_list",
    "write_partition",
]
