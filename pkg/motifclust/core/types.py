"""Type definitions shared across motifclust."""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, List, Optional, Sequence, Union

import numpy as np
from scipy import sparse


class SimilarityKind(Enum):
    """Edge similarity functions usable in threshold sparsification."""

    TW = "tw"
    TECTONIC = "tectonic"
    JACCARD = "jaccard"
    K3 = "k3"
    K4 = "k4"
    EFFRES = "effres"
    BC = "bc"

    @property
    def motif_based(self) -> bool:
        """True for kinds computed from per-edge motif statistics alone."""
        return self is not SimilarityKind.BC

    @classmethod
    def parse(cls, value: Union[str, "SimilarityKind"]) -> "SimilarityKind":
        if isinstance(value, cls):
            return value
        return cls(str(value).strip().lower())


class SelectionRule(Enum):
    """Threshold-selection rules of thumb."""

    LARGEST_CC_JUMP = "jump"
    MAX_MODULARITY = "modularity"


def canonical_labels(raw: Sequence[int]) -> np.ndarray:
    """Relabel groups so each node carries the minimum node id of its group."""
    raw = np.asarray(raw)
    n = raw.shape[0]
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    _, inverse = np.unique(raw, return_inverse=True)
    inverse = inverse.ravel()
    order = np.argsort(inverse, kind="stable")
    grouped = inverse[order]
    starts = np.flatnonzero(np.concatenate(([True], grouped[1:] != grouped[:-1])))
    representative = np.empty(starts.shape[0], dtype=np.int64)
    representative[grouped[starts]] = order[starts]
    return representative[inverse]


class Partition:
    """Non-overlapping node-to-community assignment.

    Community ids are canonical: each node is labeled with the minimum node id
    of its community, so labels[u] <= u and labels[labels[u]] == labels[u].
    """

    __slots__ = ("_labels",)

    def __init__(self, labels: Sequence[int], *, canonical: bool = False):
        values = np.asarray(labels, dtype=np.int64) if canonical else canonical_labels(labels)
        values = np.array(values, dtype=np.int64, copy=True)
        values.setflags(write=False)
        self._labels = values

    @classmethod
    def singletons(cls, node_count: int) -> "Partition":
        return cls(np.arange(node_count, dtype=np.int64), canonical=True)

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    @property
    def node_count(self) -> int:
        return int(self._labels.shape[0])

    @property
    def community_count(self) -> int:
        if self.node_count == 0:
            return 0
        return int(np.count_nonzero(self._labels == np.arange(self.node_count)))

    def sizes(self) -> np.ndarray:
        """Community sizes ordered by representative id."""
        counts = np.bincount(self._labels, minlength=self.node_count)
        return counts[counts > 0]

    def largest_size(self) -> int:
        return int(self.sizes().max()) if self.node_count else 0

    def singleton_count(self) -> int:
        return int(np.count_nonzero(self.sizes() == 1))

    def communities(self, include_singletons: bool = True) -> List[np.ndarray]:
        """Member arrays (ascending) ordered by representative id."""
        if self.node_count == 0:
            return []
        order = np.argsort(self._labels, kind="stable")
        grouped = self._labels[order]
        starts = np.flatnonzero(np.concatenate(([True], grouped[1:] != grouped[:-1])))
        groups = np.split(order, starts[1:])
        if include_singletons:
            return groups
        return [members for members in groups if members.shape[0] > 1]

    def refines(self, other: "Partition") -> bool:
        """True if every community of self lies inside one community of other."""
        if self.node_count != other.node_count:
            return False
        mapped = other.labels[self._labels]
        return bool(np.array_equal(mapped, other.labels))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return bool(np.array_equal(self._labels, other._labels))

    def __hash__(self) -> int:
        return hash(self._labels.tobytes())

    def __repr__(self) -> str:
        return f"Partition(nodes={self.node_count}, communities={self.community_count})"


class CommunitySet:
    """Possibly-overlapping collection of node sets (groundtruth or predicted)."""

    __slots__ = ("_communities", "unknown_labels", "dropped_small")

    def __init__(
        self,
        communities: Iterable[Iterable[int]],
        *,
        unknown_labels: int = 0,
        dropped_small: int = 0,
    ):
        self._communities = tuple(
            np.unique(np.fromiter((int(v) for v in members), dtype=np.int64))
            if not isinstance(members, np.ndarray)
            else np.unique(members.astype(np.int64))
            for members in communities
        )
        for members in self._communities:
            members.setflags(write=False)
        self.unknown_labels = unknown_labels
        self.dropped_small = dropped_small

    @classmethod
    def from_partition(cls, partition: Partition, include_singletons: bool = True) -> "CommunitySet":
        return cls(partition.communities(include_singletons=include_singletons))

    @property
    def communities(self) -> Sequence[np.ndarray]:
        return self._communities

    def __len__(self) -> int:
        return len(self._communities)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self._communities)

    def __getitem__(self, index: int) -> np.ndarray:
        return self._communities[index]

    def sizes(self) -> np.ndarray:
        return np.array([c.shape[0] for c in self._communities], dtype=np.int64)

    def max_node_id(self) -> int:
        if not self._communities:
            return -1
        return max((int(c[-1]) for c in self._communities if c.shape[0]), default=-1)

    def is_disjoint(self) -> bool:
        total = int(self.sizes().sum()) if self._communities else 0
        if total == 0:
            return True
        return np.unique(np.concatenate(self._communities)).shape[0] == total

    def membership_matrix(self, node_count: Optional[int] = None) -> sparse.csr_matrix:
        """Sparse node x community 0/1 matrix."""
        n = node_count if node_count is not None else self.max_node_id() + 1
        k = len(self._communities)
        if k == 0:
            return sparse.csr_matrix((n, 0), dtype=np.int64)
        rows = np.concatenate(self._communities)
        cols = np.repeat(np.arange(k, dtype=np.int64), self.sizes())
        data = np.ones(rows.shape[0], dtype=np.int64)
        return sparse.csr_matrix((data, (rows, cols)), shape=(n, k))

    def __repr__(self) -> str:
        return f"CommunitySet(communities={len(self)})"


__all__ = [
    "SimilarityKind",
    "SelectionRule",
    "Partition",
    "CommunitySet",
    "canonical_labels",
]
