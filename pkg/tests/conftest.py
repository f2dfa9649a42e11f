"""Shared fixture graphs and brute-force oracles."""

from collections import deque
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

import numpy as np
import pytest

from motifclust.graph.graph import Graph


def graph_from_pairs(n: int, pairs: Sequence[Tuple[int, int]]) -> Graph:
    if not pairs:
        return Graph.empty(n)
    src, dst = zip(*pairs)
    return Graph.from_edges(n, np.array(src), np.array(dst))


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n, p) drawn from a seeded numpy generator."""
    rng = np.random.default_rng(seed)
    us, vs = np.triu_indices(n, k=1)
    keep = rng.random(us.shape[0]) < p
    return Graph.from_edges(n, us[keep], vs[keep])


def adjacency(g: Graph) -> np.ndarray:
    return g.to_csr().toarray().astype(bool)


def brute_force_motifs(g: Graph) -> Dict[str, np.ndarray]:
    """Per-edge triangles, wedges and 4-clique counts from the dense adjacency matrix."""
    a = adjacency(g)
    us, vs = g.canonical_edges()
    triangles, wedges, k4 = [], [], []
    for u, v in zip(us.tolist(), vs.tolist()):
        common = a[u] & a[v]
        union = a[u] | a[v]
        t = int(common.sum())
        triangles.append(t)
        wedges.append(int(union.sum()) - t - 2)
        members = np.flatnonzero(common)
        k4.append(int(a[np.ix_(members, members)].sum()) // 2)
    return {
        "triangles": np.array(triangles, dtype=np.int64),
        "wedges": np.array(wedges, dtype=np.int64),
        "k4": np.array(k4, dtype=np.int64),
    }


def brute_force_triangle_count(g: Graph) -> int:
    a = adjacency(g)
    return sum(
        1 for x, y, z in combinations(range(g.node_count), 3) if a[x, y] and a[y, z] and a[x, z]
    )


def bfs_labels(g: Graph) -> List[int]:
    """Sequential BFS labeling: every node gets the smallest id of its component."""
    labels = [-1] * g.node_count
    for start in range(g.node_count):
        if labels[start] >= 0:
            continue
        labels[start] = start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors_of(u).tolist():
                if labels[w] < 0:
                    labels[w] = start
                    queue.append(w)
    return labels


@pytest.fixture
def triangle() -> Graph:
    return graph_from_pairs(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def path3() -> Graph:
    return graph_from_pairs(3, [(0, 1), (1, 2)])


@pytest.fixture
def cycle4() -> Graph:
    return graph_from_pairs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def star3() -> Graph:
    """Center 3, leaves 0, 1, 2."""
    return graph_from_pairs(4, [(3, 0), (3, 1), (3, 2)])


@pytest.fixture
def k4() -> Graph:
    return graph_from_pairs(4, list(combinations(range(4), 2)))


@pytest.fixture
def k5() -> Graph:
    return graph_from_pairs(5, list(combinations(range(5), 2)))


@pytest.fixture
def two_triangles_bridge() -> Graph:
    """Triangles {0,1,2} and {3,4,5} joined by the bridge (2, 3)."""
    return graph_from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


@pytest.fixture
def two_triangles() -> Graph:
    return graph_from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
