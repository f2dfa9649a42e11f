"""Tests for Partition, CommunitySet and the shared enums."""

import numpy as np
import pytest

from motifclust.core.exceptions import (
    ConfigurationError,
    GraphFormatError,
    InputError,
    MotifClustError,
    SizeLimitError,
    ValidationError,
)
from motifclust.core.types import CommunitySet, Partition, SimilarityKind, canonical_labels


class TestCanonicalLabels:
    def test_minimum_member_representative(self):
        assert canonical_labels([5, 5, 2, 2, 7]).tolist() == [0, 0, 2, 2, 4]

    def test_empty(self):
        assert canonical_labels([]).tolist() == []


class TestPartition:
    def test_invariants(self):
        p = Partition([3, 1, 3, 1, 8, 3])
        labels = p.labels
        assert np.all(labels <= np.arange(6))
        assert np.array_equal(labels[labels], labels)
        assert p.community_count == 3
        assert p.sizes().tolist() == [3, 2, 1]
        assert p.largest_size() == 3
        assert p.singleton_count() == 1

    def test_communities_ordered_by_representative(self):
        p = Partition([1, 0, 1, 0])
        assert [c.tolist() for c in p.communities()] == [[0, 2], [1, 3]]

    def test_drop_singletons(self):
        p = Partition([0, 0, 2, 3])
        assert [c.tolist() for c in p.communities(include_singletons=False)] == [[0, 1]]

    def test_singletons(self):
        p = Partition.singletons(4)
        assert p.labels.tolist() == [0, 1, 2, 3]
        assert p.community_count == 4

    def test_refines(self):
        fine = Partition([0, 0, 2, 3])
        coarse = Partition([0, 0, 0, 3])
        assert fine.refines(coarse)
        assert not coarse.refines(fine)

    def test_equality(self):
        assert Partition([4, 4, 9]) == Partition([0, 0, 2], canonical=True)
        assert hash(Partition([4, 4, 9])) == hash(Partition([1, 1, 0]))


class TestCommunitySet:
    def test_members_sorted_and_unique(self):
        communities = CommunitySet([[3, 1, 1], np.array([2, 0])])
        assert [c.tolist() for c in communities] == [[1, 3], [0, 2]]
        assert communities.sizes().tolist() == [2, 2]
        assert communities.max_node_id() == 3

    def test_disjointness(self):
        assert CommunitySet([[0, 1], [2]]).is_disjoint()
        assert not CommunitySet([[0, 1], [1, 2]]).is_disjoint()

    def test_membership_matrix(self):
        matrix = CommunitySet([[0, 1], [1, 2]]).membership_matrix(4).toarray()
        assert matrix.tolist() == [[1, 0], [1, 1], [0, 1], [0, 0]]

    def test_from_partition(self):
        communities = CommunitySet.from_partition(Partition([0, 0, 2]), include_singletons=False)
        assert [c.tolist() for c in communities] == [[0, 1]]


class TestEnumsAndErrors:
    def test_motif_based(self):
        assert SimilarityKind.TW.motif_based
        assert not SimilarityKind.BC.motif_based

    @pytest.mark.parametrize(
        "error, code, exit_code",
        [
            (ConfigurationError("x"), "CONFIG_ERROR", 1),
            (ValidationError("x"), "VALIDATION_ERROR", 1),
            (SizeLimitError(10, 5), "SIZE_LIMIT", 1),
            (InputError("/tmp/f"), "INPUT_ERROR", 2),
            (GraphFormatError("x", path="f", line=3), "FORMAT_ERROR", 3),
        ],
    )
    def test_error_codes(self, error, code, exit_code):
        assert isinstance(error, MotifClustError)
        assert error.code == code
        assert error.exit_code == exit_code
        assert error.to_dict()["error"] == code
