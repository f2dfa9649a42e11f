"""Tests for per-edge motif counting."""

import numpy as np
import pytest

from motifclust.graph.graph import Graph
from motifclust.motifs import counting
from motifclust.motifs.counting import count_edge_motifs
from motifclust.utils.parallel import num_workers

from conftest import brute_force_motifs, brute_force_triangle_count, random_graph


def _edge_index(g, u, v):
    us, vs = g.canonical_edges()
    return int(np.flatnonzero((us == u) & (vs == v))[0])


class TestSmallGraphs:
    def test_triangle(self, triangle):
        stats = count_edge_motifs(triangle)
        i = _edge_index(triangle, 0, 1)
        assert (stats.triangles[i], stats.wedges[i], stats.degree_sum[i]) == (1, 0, 4)

    def test_path(self, path3):
        stats = count_edge_motifs(path3)
        i = _edge_index(path3, 0, 1)
        assert (stats.triangles[i], stats.wedges[i], stats.degree_sum[i]) == (0, 1, 3)

    def test_four_cycle(self, cycle4):
        stats = count_edge_motifs(cycle4)
        i = _edge_index(cycle4, 0, 1)
        assert (stats.triangles[i], stats.wedges[i]) == (0, 2)

    def test_k4(self, k4):
        stats = count_edge_motifs(k4, with_k4=True)
        assert stats.triangles.tolist() == [2] * 6
        assert stats.k4.tolist() == [1] * 6

    def test_k5(self, k5):
        stats = count_edge_motifs(k5, with_k4=True)
        assert stats.triangles.tolist() == [3] * 10
        assert stats.k4.tolist() == [3] * 10

    def test_k4_optional(self, triangle):
        stats = count_edge_motifs(triangle)
        assert stats.k4 is None
        assert not stats.has_k4

    def test_empty_graph(self):
        stats = count_edge_motifs(Graph.empty(3), with_k4=True)
        assert stats.edge_count == 0
        assert stats.k4.shape == (0,)

    def test_results_read_only(self, triangle):
        stats = count_edge_motifs(triangle)
        with pytest.raises(ValueError):
            stats.triangles[0] = 5


class TestOracleEquivalence:
    @pytest.mark.parametrize("seed", range(50))
    def test_random_graphs_match_brute_force(self, seed):
        p = (0.05, 0.1, 0.3)[seed % 3]
        g = random_graph(60, p, seed=seed)
        stats = count_edge_motifs(g, with_k4=True)
        oracle = brute_force_motifs(g)
        np.testing.assert_array_equal(stats.triangles, oracle["triangles"])
        np.testing.assert_array_equal(stats.wedges, oracle["wedges"])
        np.testing.assert_array_equal(stats.k4, oracle["k4"])

    def test_wedge_identity(self):
        g = random_graph(80, 0.1, seed=11)
        stats = count_edge_motifs(g)
        us, vs = g.canonical_edges()
        degrees = g.degrees
        expected = degrees[us] + degrees[vs] - 2 * stats.triangles - 2
        np.testing.assert_array_equal(stats.wedges, expected)
        assert np.all(stats.wedges >= 0)
        assert np.all(stats.triangles <= np.minimum(degrees[us], degrees[vs]))

    def test_global_triangle_sum(self):
        g = random_graph(30, 0.3, seed=5)
        stats = count_edge_motifs(g)
        assert int(stats.triangles.sum()) == 3 * brute_force_triangle_count(g)
        assert stats.global_triangles() == brute_force_triangle_count(g)

    def test_small_blocks_and_chunks(self, monkeypatch):
        monkeypatch.setattr(counting, "BLOCK_WORK", 16)
        monkeypatch.setattr(counting, "K4_CHUNK_EDGES", 7)
        g = random_graph(50, 0.3, seed=21)
        stats = count_edge_motifs(g, with_k4=True)
        oracle = brute_force_motifs(g)
        np.testing.assert_array_equal(stats.triangles, oracle["triangles"])
        np.testing.assert_array_equal(stats.k4, oracle["k4"])


class TestDeterminism:
    def test_worker_count_independent(self, monkeypatch):
        monkeypatch.setattr(counting, "BLOCK_WORK", 64)
        monkeypatch.setattr(counting, "K4_CHUNK_EDGES", 64)
        g = random_graph(120, 0.1, seed=2)
        results = []
        for workers in (1, 2, 4, 8):
            with num_workers(workers):
                results.append(count_edge_motifs(g, with_k4=True))
        for other in results[1:]:
            np.testing.assert_array_equal(other.triangles, results[0].triangles)
            np.testing.assert_array_equal(other.k4, results[0].k4)
