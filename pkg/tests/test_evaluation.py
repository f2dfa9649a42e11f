"""Tests for precision / recall / F1 evaluation and community densities."""

import json

import pytest

from motifclust.core.exceptions import ValidationError
from motifclust.core.types import CommunitySet, Partition
from motifclust.quality.evaluation import (
    CSV_SUMMARY_HEADER,
    community_densities,
    density_histogram,
    evaluate,
)

TRIANGLES = CommunitySet([[0, 1, 2], [3, 4, 5]])


class TestEvaluate:
    def test_exact_recovery(self):
        report = evaluate(Partition([0, 0, 0, 3, 3, 3]), TRIANGLES)
        assert (report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0)
        assert [c.matched for c in report.clusters] == [0, 1]

    def test_merged_cluster(self):
        report = evaluate(Partition([0, 0, 0, 0]), CommunitySet([[0, 1], [2, 3]]))
        assert report.precision == 0.5
        assert report.recall == 1.0
        assert report.f1 == pytest.approx(2 / 3)
        # equal Jaccard: lowest groundtruth index wins
        assert report.clusters[0].matched == 0
        assert report.clusters[0].jaccard == 0.5

    def test_split_cluster(self):
        report = evaluate(Partition([0, 0, 2, 2, 2, 5]), TRIANGLES)
        # {0,1}: p 1, r 2/3; {2,3,4}: matched to {3,4,5}, p 2/3, r 2/3; {5}: p 1, r 1/3
        assert report.precision == pytest.approx((2 * 1 + 3 * 2 / 3 + 1) / 6)
        assert report.recall == pytest.approx((2 * 2 / 3 + 3 * 2 / 3 + 1 / 3) / 6)
        assert report.clusters[1].matched == 1

    def test_unmatched_cluster(self):
        report = evaluate(Partition([0, 0, 2, 2]), CommunitySet([[0, 1]]))
        assert report.clusters[1].matched is None
        assert report.clusters[1].p == 0.0
        assert (report.precision, report.recall, report.f1) == (0.5, 0.5, 0.5)

    def test_singletons_dropped(self):
        truth = CommunitySet([[0, 1]])
        assert evaluate(Partition([0, 0, 2]), truth, include_singletons=False).precision == 1.0
        report = evaluate(Partition([0, 0, 2]), truth)
        assert report.precision == pytest.approx(2 / 3)
        assert report.singleton_count == 1

    def test_overlapping_truth(self):
        report = evaluate(Partition([0, 0, 0]), CommunitySet([[0, 1], [0, 1, 2]]))
        assert report.clusters[0].matched == 1
        assert report.f1 == 1.0

    def test_disjoint_community_set_prediction(self):
        report = evaluate(CommunitySet([[0, 1, 2], [3, 4, 5]]), TRIANGLES)
        assert report.f1 == 1.0

    def test_overlapping_prediction_rejected(self):
        with pytest.raises(ValidationError):
            evaluate(CommunitySet([[0, 1], [1, 2]]), TRIANGLES)

    def test_empty_inputs_rejected(self):
        with pytest.raises(ValidationError):
            evaluate(Partition.singletons(0), TRIANGLES)
        with pytest.raises(ValidationError):
            evaluate(Partition([0, 0]), CommunitySet([]))
        with pytest.raises(ValidationError):
            evaluate(Partition([0, 1]), TRIANGLES, include_singletons=False)

    def test_unknown_labels_reported(self):
        truth = CommunitySet([[0, 1]], unknown_labels=3)
        assert evaluate(Partition([0, 0]), truth).unknown_labels == 3

    def test_serialization(self):
        report = evaluate(Partition([0, 0, 0, 3, 3, 3]), TRIANGLES)
        payload = json.loads(report.to_json())
        assert payload["f1"] == 1.0
        assert payload["clusters"][0]["size"] == 3
        assert CSV_SUMMARY_HEADER.split(",") == ["precision", "recall", "f1", "clusters", "singletons"]
        assert report.csv_summary() == "1,1,1,2,0"


    def test_prediction_unknown_labels_reported(self):
        predicted = CommunitySet([[0, 1, 2], [3, 4, 5]], unknown_labels=3)
        report = evaluate(predicted, TRIANGLES)
        assert report.unknown_pred_labels == 3
        assert evaluate(Partition([0, 0, 0, 3, 3, 3]), TRIANGLES).unknown_pred_labels == 0


class TestNestedGroundtruth:
    """Three 4-node squares, each a community, plus one community holding all twelve nodes."""

    TRUTH = CommunitySet([[0, 1, 2, 3], [4, 5, 6, 7], [8, 9, 10, 11], list(range(12))])

    def test_fine_partition_is_perfect(self):
        report = evaluate(Partition([0] * 4 + [4] * 4 + [8] * 4), self.TRUTH)
        assert (report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0)
        assert [c.matched for c in report.clusters] == [0, 1, 2]

    def test_coarse_partition_is_perfect(self):
        report = evaluate(Partition([0] * 12), self.TRUTH)
        assert (report.precision, report.recall, report.f1) == (1.0, 1.0, 1.0)
        assert [c.matched for c in report.clusters] == [3]

    def test_mid_resolution_partition_is_penalized(self):
        # two squares merged: Jaccard 8/12 with the whole graph beats 4/8 with either square
        report = evaluate(Partition([0] * 8 + [8] * 4), self.TRUTH)
        assert [c.matched for c in report.clusters] == [3, 2]
        assert report.precision == 1.0
        assert report.recall == pytest.approx(7 / 9)
        assert report.f1 == pytest.approx(13 / 15)
        assert report.f1 < 1.0


class TestDensities:
    def test_complete_communities(self, two_triangles_bridge):
        assert community_densities(two_triangles_bridge, TRIANGLES).tolist() == [1.0, 1.0]
        histogram = density_histogram(two_triangles_bridge, TRIANGLES)
        assert len(histogram) == 10
        assert histogram[-1].count == 2
        assert sum(b.count for b in histogram) == 2

    def test_partial_community(self, two_triangles_bridge):
        truth = CommunitySet([[0, 1, 2, 3], [5]])
        densities = community_densities(two_triangles_bridge, truth)
        assert densities.tolist() == pytest.approx([4 / 6])
        histogram = density_histogram(two_triangles_bridge, truth, bins=3)
        assert [b.count for b in histogram] == [0, 0, 1]
        assert histogram[0].high == pytest.approx(1 / 3)

    def test_bad_bins(self, triangle):
        with pytest.raises(ValidationError):
            density_histogram(triangle, CommunitySet([[0, 1]]), bins=0)

    def test_truth_outside_graph(self, triangle):
        with pytest.raises(ValidationError):
            community_densities(triangle, CommunitySet([[0, 9]]))
