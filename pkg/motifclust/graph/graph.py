"""Immutable undirected simple graph in compressed-adjacency (CSR) form."""

from __future__ import annotations

from typing import Optional, Tuple

import numpy as np
from scipy import sparse

from ..core.exceptions import ValidationError

_INT32_LIMIT = 2**31 - 1


def _id_dtype(node_count: int) -> np.dtype:
    return np.dtype(np.int32) if node_count < _INT32_LIMIT else np.dtype(np.int64)


def _frozen(values: np.ndarray) -> np.ndarray:
    values.setflags(write=False)
    return values


class Graph:
    """Undirected simple graph over dense node ids 0..n-1.

    The neighbor list of node u is neighbors[offsets[u]:offsets[u+1]], strictly
    increasing, without u itself. Every edge is stored once per endpoint.
    """

    __slots__ = ("_node_count", "_offsets", "_neighbors", "_edges", "_slot_edge_ids", "_csr")

    def __init__(self, node_count: int, offsets: np.ndarray, neighbors: np.ndarray, *, validate: bool = True):
        offsets = np.asarray(offsets, dtype=np.int64)
        neighbors = np.asarray(neighbors, dtype=_id_dtype(node_count))
        if validate:
            _validate_csr(node_count, offsets, neighbors)
        self._node_count = int(node_count)
        self._offsets = _frozen(np.array(offsets, copy=True))
        self._neighbors = _frozen(np.array(neighbors, copy=True))
        self._edges: Optional[Tuple[np.ndarray, np.ndarray]] = None
        self._slot_edge_ids: Optional[np.ndarray] = None
        self._csr: Optional[sparse.csr_matrix] = None

    @classmethod
    def empty(cls, node_count: int = 0) -> "Graph":
        return cls(node_count, np.zeros(node_count + 1, dtype=np.int64), np.zeros(0), validate=False)

    @classmethod
    def from_edges(cls, node_count: int, src: np.ndarray, dst: np.ndarray) -> "Graph":
        """Build from endpoint arrays; self-loops and duplicates are dropped."""
        src = np.asarray(src, dtype=np.int64).ravel()
        dst = np.asarray(dst, dtype=np.int64).ravel()
        if src.shape != dst.shape:
            raise ValidationError("src and dst must have the same length")
        if src.size and (min(src.min(), dst.min()) < 0 or max(src.max(), dst.max()) >= node_count):
            raise ValidationError(f"edge endpoint outside 0..{node_count - 1}")
        keep = src != dst
        src, dst = src[keep], dst[keep]
        lo = np.minimum(src, dst)
        hi = np.maximum(src, dst)
        keys = np.unique(lo * np.int64(max(node_count, 1)) + hi)
        return cls.from_canonical(node_count, keys // max(node_count, 1), keys % max(node_count, 1))

    @classmethod
    def from_canonical(cls, node_count: int, us: np.ndarray, vs: np.ndarray) -> "Graph":
        """Build from unique (u, v) pairs with u < v in lexicographic order."""
        us = np.asarray(us, dtype=np.int64)
        vs = np.asarray(vs, dtype=np.int64)
        rows = np.concatenate((us, vs))
        cols = np.concatenate((vs, us))
        order = np.lexsort((cols, rows))
        rows, cols = rows[order], cols[order]
        degrees = np.bincount(rows, minlength=node_count)
        offsets = np.zeros(node_count + 1, dtype=np.int64)
        np.cumsum(degrees, out=offsets[1:])
        graph = cls(node_count, offsets, cols, validate=False)
        graph._edges = (_frozen(us.astype(graph._neighbors.dtype)), _frozen(vs.astype(graph._neighbors.dtype)))
        return graph

    @property
    def node_count(self) -> int:
        return self._node_count

    @property
    def edge_count(self) -> int:
        return int(self._neighbors.shape[0] // 2)

    @property
    def offsets(self) -> np.ndarray:
        return self._offsets

    @property
    def neighbors(self) -> np.ndarray:
        return self._neighbors

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._offsets)

    def degree(self, u: int) -> int:
        return int(self._offsets[u + 1] - self._offsets[u])

    def neighbors_of(self, u: int) -> np.ndarray:
        return self._neighbors[self._offsets[u]:self._offsets[u + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors_of(u)
        pos = int(np.searchsorted(row, v))
        return pos < row.shape[0] and int(row[pos]) == v

    def slot_rows(self) -> np.ndarray:
        """Source node of every adjacency slot."""
        return np.repeat(np.arange(self._node_count, dtype=self._neighbors.dtype), self.degrees)

    def canonical_edges(self) -> Tuple[np.ndarray, np.ndarray]:
        """(us, vs) with us < vs, lexicographic; EdgeId i is the i-th pair."""
        if self._edges is None:
            rows = self.slot_rows()
            upper = rows < self._neighbors
            self._edges = (_frozen(rows[upper]), _frozen(np.array(self._neighbors[upper])))
        return self._edges

    def slot_edge_ids(self) -> np.ndarray:
        """EdgeId of every adjacency slot (both copies of an edge share one id)."""
        if self._slot_edge_ids is None:
            us, vs = self.canonical_edges()
            n = np.int64(max(self._node_count, 1))
            keys = us.astype(np.int64) * n + vs
            rows = self.slot_rows().astype(np.int64)
            cols = self._neighbors.astype(np.int64)
            slot_keys = np.minimum(rows, cols) * n + np.maximum(rows, cols)
            self._slot_edge_ids = _frozen(np.searchsorted(keys, slot_keys).astype(np.int64))
        return self._slot_edge_ids

    def to_csr(self) -> sparse.csr_matrix:
        """0/1 adjacency as a scipy CSR matrix sharing this graph's index arrays."""
        if self._csr is None:
            data = np.ones(self._neighbors.shape[0], dtype=np.int64)
            matrix = sparse.csr_matrix(
                (data, self._neighbors, self._offsets),
                shape=(self._node_count, self._node_count),
            )
            matrix.has_sorted_indices = True
            self._csr = matrix
        return self._csr

    def subgraph_edges(self, keep: np.ndarray) -> "Graph":
        """Graph on the same nodes keeping canonical edges where keep is True."""
        keep = np.asarray(keep, dtype=bool)
        if keep.shape[0] != self.edge_count:
            raise ValidationError(f"mask has {keep.shape[0]} entries, graph has {self.edge_count} edges")
        slot_keep = keep[self.slot_edge_ids()]
        rows = self.slot_rows()[slot_keep]
        kept_degrees = np.bincount(rows, minlength=self._node_count)
        offsets = np.zeros(self._node_count + 1, dtype=np.int64)
        np.cumsum(kept_degrees, out=offsets[1:])
        graph = Graph(self._node_count, offsets, self._neighbors[slot_keep], validate=False)
        us, vs = self.canonical_edges()
        graph._edges = (_frozen(us[keep]), _frozen(vs[keep]))
        return graph

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._node_count == other._node_count
            and np.array_equal(self._offsets, other._offsets)
            and np.array_equal(self._neighbors, other._neighbors)
        )

    def __hash__(self) -> int:
        return hash((self._node_count, self._neighbors.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.node_count}, m={self.edge_count})"


def _validate_csr(node_count: int, offsets: np.ndarray, neighbors: np.ndarray) -> None:
    if node_count < 0:
        raise ValidationError("node_count must be >= 0")
    if offsets.shape[0] != node_count + 1 or offsets[0] != 0 or offsets[-1] != neighbors.shape[0]:
        raise ValidationError("offsets must have n+1 entries from 0 to len(neighbors)")
    degrees = np.diff(offsets)
    if np.any(degrees < 0):
        raise ValidationError("offsets must be non-decreasing")
    if neighbors.shape[0] == 0:
        return
    if neighbors.min() < 0 or neighbors.max() >= node_count:
        raise ValidationError("neighbor id outside 0..n-1")
    rows = np.repeat(np.arange(node_count, dtype=np.int64), degrees)
    cols = neighbors.astype(np.int64)
    if np.any(rows == cols):
        raise ValidationError("self-loops are not allowed")
    same_row = rows[1:] == rows[:-1]
    if np.any(same_row & (cols[1:] <= cols[:-1])):
        raise ValidationError("neighbor lists must be strictly increasing")
    forward = rows * node_count + cols
    backward = np.sort(cols * node_count + rows)
    if not np.array_equal(forward, backward):
        raise ValidationError("adjacency is not symmetric")


def canonical_edges(g: Graph) -> Tuple[np.ndarray, np.ndarray]:
    """Lexicographic (u < v) enumeration of the edges of g."""
    return g.canonical_edges()
