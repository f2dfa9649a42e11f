"""Tests for motif-cut fractions and score separation."""

from itertools import combinations

import numpy as np
import pytest

from motifclust.core.exceptions import ValidationError
from motifclust.core.types import CommunitySet, SimilarityKind
from motifclust.graph.graph import Graph
from motifclust.motifs.counting import count_edge_motifs
from motifclust.motifs.diagnostics import inside_edge_mask, motif_cut_fractions, score_separation
from motifclust.motifs.similarity import EdgeScores, score_edges

from conftest import adjacency, random_graph

TRIANGLES = CommunitySet([[0, 1, 2], [3, 4, 5]])


class TestScoreSeparation:
    def test_tw_separates_bridge(self, two_triangles_bridge):
        g = two_triangles_bridge
        scores = score_edges(g, count_edge_motifs(g), SimilarityKind.TW)
        # bridge (2, 3) has t = 0 and degree sum 6
        assert scores.values[3] == -4.0
        separation = score_separation(g, scores, TRIANGLES)
        inside = np.delete(scores.values, 3)
        expected = (inside.mean() - (-4.0)) / np.std(scores.values)
        assert separation == pytest.approx(expected)
        assert separation > 0

    def test_constant_scores_undefined(self, two_triangles_bridge):
        scores = EdgeScores(SimilarityKind.TW, np.zeros(7))
        assert score_separation(two_triangles_bridge, scores, TRIANGLES) is None

    def test_no_inside_edges_undefined(self, two_triangles_bridge):
        g = two_triangles_bridge
        scores = score_edges(g, count_edge_motifs(g), SimilarityKind.TW)
        assert score_separation(g, scores, CommunitySet([[0, 5]])) is None

    def test_no_across_edges_undefined(self, triangle):
        scores = score_edges(triangle, count_edge_motifs(triangle), SimilarityKind.TW)
        assert score_separation(triangle, scores, CommunitySet([[0, 1, 2]])) is None

    def test_empty_truth_rejected(self, triangle):
        scores = score_edges(triangle, count_edge_motifs(triangle), SimilarityKind.TW)
        with pytest.raises(ValidationError):
            score_separation(triangle, scores, CommunitySet([]))

    def test_overlapping_membership(self, triangle):
        mask = inside_edge_mask(triangle, CommunitySet([[0, 1], [1, 2]]))
        assert mask.tolist() == [True, False, True]


class TestMotifCutFractions:
    def test_whole_triangle(self, triangle):
        cut = motif_cut_fractions(triangle, CommunitySet([[0, 1, 2]]))
        assert (cut.edges_cut, cut.wedges_cut, cut.triangles_cut) == (0.0, 0.0, 0.0)

    def test_partial_triangle(self, triangle):
        cut = motif_cut_fractions(triangle, CommunitySet([[0, 1]]))
        assert cut.edges_cut == pytest.approx(2 / 3)
        assert cut.wedges_cut == 1.0
        assert cut.triangles_cut == 1.0

    def test_two_triangles_bridge(self, two_triangles_bridge):
        cut = motif_cut_fractions(two_triangles_bridge, TRIANGLES)
        assert cut.triangles_cut == 0.0
        assert cut.edges_cut == pytest.approx(1 / 7)
        # 10 length-2 paths, 4 of them through the bridge
        assert cut.wedges_cut == pytest.approx(0.4)

    def test_overlapping_truth(self, triangle):
        cut = motif_cut_fractions(triangle, CommunitySet([[0, 1], [1, 2]]))
        assert cut.edges_cut == pytest.approx(1 / 3)
        assert cut.wedges_cut == 1.0
        assert cut.triangles_cut == 1.0

    def test_absent_motif_class_undefined(self, path3):
        cut = motif_cut_fractions(path3, CommunitySet([[0, 1, 2]]))
        assert cut.triangles_cut is None
        assert cut.edges_cut == 0.0
        assert cut.wedges_cut == 0.0
        assert cut.to_dict()["triangles_cut"] is None

    def test_truth_outside_graph(self, triangle):
        with pytest.raises(ValidationError):
            motif_cut_fractions(triangle, CommunitySet([[0, 7]]))

    @pytest.mark.parametrize("seed", range(6))
    def test_many_overlapping_communities_match_enumeration(self, seed):
        g = random_graph(45, 0.25, seed=seed)
        rng = np.random.default_rng(1000 + seed)
        truth = CommunitySet(
            rng.choice(45, size=int(rng.integers(2, 9)), replace=False) for _ in range(60)
        )
        a = adjacency(g)
        groups = [set(c.tolist()) for c in truth]

        def uncut(*nodes):
            return any(all(x in c for x in nodes) for c in groups)

        wedges = [
            (x, c, y)
            for c in range(45)
            for x, y in combinations(np.flatnonzero(a[c]).tolist(), 2)
        ]
        triangles = [
            (x, y, z) for x, y, z in combinations(range(45), 3) if a[x, y] and a[x, z] and a[y, z]
        ]
        edges = list(zip(*(side.tolist() for side in g.canonical_edges())))

        cut = motif_cut_fractions(g, truth)
        assert cut.edges_cut == pytest.approx(sum(not uncut(*e) for e in edges) / len(edges))
        assert cut.wedges_cut == pytest.approx(sum(not uncut(*w) for w in wedges) / len(wedges))
        assert cut.triangles_cut == pytest.approx(
            sum(not uncut(*t) for t in triangles) / len(triangles)
        )

    def test_long_path_with_many_small_communities(self):
        n = 200_000
        g = Graph.from_edges(n, np.arange(n - 1), np.arange(1, n))
        truth = CommunitySet(np.arange(n).reshape(-1, 4))
        cut = motif_cut_fractions(g, truth)
        # every block of four holds three edges and the wedges centred on its two inner nodes
        assert cut.edges_cut == pytest.approx(49_999 / 199_999)
        assert cut.wedges_cut == pytest.approx(99_998 / 199_998)
        assert cut.triangles_cut is None
