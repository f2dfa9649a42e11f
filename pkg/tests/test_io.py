"""Tests for edge-list and community file handling."""

import gzip

import numpy as np
import pytest

from motifclust.core.exceptions import GraphFormatError, InputError
from motifclust.core.types import Partition
from motifclust.graph.io import (
    NodeIdMap,
    load_communities,
    load_edge_list,
    read_partition,
    write_edge_list,
    write_partition,
)


def _write(path, text):
    path.write_text(text)
    return path


class TestLoadEdgeList:
    def test_triangle(self, tmp_path):
        g, id_map = load_edge_list(_write(tmp_path / "tri.txt", "0 1\n1 2\n2 0\n"))
        assert (g.node_count, g.edge_count) == (3, 3)
        assert id_map.labels.tolist() == [0, 1, 2]

    def test_self_loop_and_duplicate(self, tmp_path):
        g, id_map = load_edge_list(_write(tmp_path / "g.txt", "# c\n5 5\n5 7\n7 5\n"))
        assert (g.node_count, g.edge_count) == (2, 1)
        assert id_map.labels.tolist() == [5, 7]
        assert id_map.to_label(1) == 7

    def test_sparse_labels_are_remapped_in_label_order(self, tmp_path):
        g, id_map = load_edge_list(_write(tmp_path / "g.txt", "100 3\n3 42\n"))
        assert id_map.labels.tolist() == [3, 42, 100]
        us, vs = g.canonical_edges()
        assert list(zip(us.tolist(), vs.tolist())) == [(0, 1), (0, 2)]

    def test_empty_file(self, tmp_path):
        g, id_map = load_edge_list(_write(tmp_path / "empty.txt", "# nothing\n\n"))
        assert g.node_count == 0
        assert len(id_map) == 0

    def test_extra_columns_ignored(self, tmp_path):
        g, _ = load_edge_list(_write(tmp_path / "g.txt", "0 1 0.5\n1 2 7\n"))
        assert g.edge_count == 2

    def test_gzip(self, tmp_path):
        path = tmp_path / "tri.txt.gz"
        with gzip.open(path, "wt") as handle:
            handle.write("0 1\n1 2\n2 0\n")
        g, _ = load_edge_list(path)
        assert g.edge_count == 3

    def test_non_integer_token(self, tmp_path):
        path = _write(tmp_path / "bad.txt", "0 1\n1 x\n")
        with pytest.raises(GraphFormatError) as excinfo:
            load_edge_list(path)
        assert excinfo.value.line == 2
        assert f"{path}:2:" in str(excinfo.value)
        assert excinfo.value.exit_code == 3

    def test_label_beyond_int64(self, tmp_path):
        path = _write(tmp_path / "big.txt", "0 1\n1 99999999999999999999\n")
        with pytest.raises(GraphFormatError) as excinfo:
            load_edge_list(path)
        assert excinfo.value.line == 2
        assert excinfo.value.exit_code == 3

    def test_int64_extremes_accepted(self, tmp_path):
        path = _write(tmp_path / "edge.txt", "-9223372036854775808 9223372036854775807\n")
        g, id_map = load_edge_list(path)
        assert g.edge_count == 1
        assert id_map.labels.tolist() == [-(2 ** 63), 2 ** 63 - 1]

    def test_single_token_line(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path / "bad.txt", "0 1\n7\n"))

    def test_missing_file(self, tmp_path):
        path = tmp_path / "missing.txt"
        with pytest.raises(InputError) as excinfo:
            load_edge_list(path)
        assert str(path) in str(excinfo.value)
        assert excinfo.value.exit_code == 2

    def test_strict_duplicates(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path / "g.txt", "0 1\n1 0\n"), dedup=False)

    def test_strict_self_loops(self, tmp_path):
        with pytest.raises(GraphFormatError):
            load_edge_list(_write(tmp_path / "g.txt", "0 1\n1 1\n"), drop_self_loops=False)

    def test_reload_is_identical(self, tmp_path):
        source = _write(tmp_path / "g.txt", "9 2\n2 5\n5 9\n5 11\n11 5\n")
        g, id_map = load_edge_list(source)
        out = tmp_path / "out.txt"
        write_edge_list(out, g, id_map, header="roundtrip")
        g2, id_map2 = load_edge_list(out)
        assert g2 == g
        assert id_map2 == id_map


class TestNodeIdMap:
    def test_unknown_labels(self):
        id_map = NodeIdMap([10, 20, 30])
        assert id_map.to_dense([20, 25, 10]).tolist() == [1, -1, 0]

    def test_roundtrip(self):
        id_map = NodeIdMap([7, 3, 11])
        dense = id_map.to_dense([3, 7, 11])
        assert id_map.to_label(dense).tolist() == [3, 7, 11]


class TestCommunities:
    def test_size_filter(self, tmp_path):
        truth = load_communities(_write(tmp_path / "c.txt", "0 1 2\n3 4\n"), NodeIdMap.identity(5), 3)
        assert len(truth) == 1
        assert truth[0].tolist() == [0, 1, 2]
        assert truth.dropped_small == 1

    def test_overlap_allowed(self, tmp_path):
        truth = load_communities(_write(tmp_path / "c.txt", "0 1 2\n0 1 3\n"), NodeIdMap.identity(4), 3)
        assert len(truth) == 2
        assert not truth.is_disjoint()

    def test_filter_disabled(self, tmp_path):
        truth = load_communities(_write(tmp_path / "c.txt", "0 1 2\n3 4\n"), NodeIdMap.identity(5), 1)
        assert len(truth) == 2

    def test_unknown_labels_counted(self, tmp_path):
        truth = load_communities(_write(tmp_path / "c.txt", "2 0 99 1\n"), NodeIdMap.identity(3), 3)
        assert truth.unknown_labels == 1
        assert truth[0].tolist() == [0, 1, 2]

    def test_labels_resolved_through_map(self, tmp_path):
        truth = load_communities(_write(tmp_path / "c.txt", "30 10 20\n"), NodeIdMap([10, 20, 30]), 3)
        assert truth[0].tolist() == [0, 1, 2]

    def test_unreadable(self, tmp_path):
        with pytest.raises(InputError):
            load_communities(tmp_path / "nope.txt", NodeIdMap.identity(3))


class TestPartitionFiles:
    def test_write_orders_by_representative(self, tmp_path):
        partition = Partition(np.array([4, 1, 4, 1, 9]))
        out = tmp_path / "p.txt"
        written = write_partition(out, partition, NodeIdMap([10, 11, 12, 13, 14]))
        assert written == 3
        assert out.read_text().splitlines() == ["10 12", "11 13", "14"]

    def test_drop_singletons(self, tmp_path):
        out = tmp_path / "p.txt"
        write_partition(out, Partition(np.array([0, 0, 2])), include_singletons=False)
        assert out.read_text().splitlines() == ["0 1"]

    def test_read_back(self, tmp_path):
        id_map = NodeIdMap([10, 11, 12, 13])
        predicted, _ = read_partition(_write(tmp_path / "p.txt", "10 11\n12\n13\n"), id_map)
        assert [c.tolist() for c in predicted] == [[0, 1], [2], [3]]

    def test_read_builds_map(self, tmp_path):
        predicted, id_map = read_partition(_write(tmp_path / "p.txt", "5 9\n7\n"))
        assert id_map.labels.tolist() == [5, 7, 9]
        assert [c.tolist() for c in predicted] == [[0, 2], [1]]

    def test_overlapping_partition_rejected(self, tmp_path):
        with pytest.raises(GraphFormatError):
            read_partition(_write(tmp_path / "p.txt", "1 2\n2 3\n"))

    def test_non_ascii_partition(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_bytes(b"1 2\n3 \xe9\n")
        with pytest.raises(GraphFormatError) as excinfo:
            read_partition(path)
        assert excinfo.value.exit_code == 3

    def test_oversized_partition_label(self, tmp_path):
        with pytest.raises(GraphFormatError) as excinfo:
            read_partition(_write(tmp_path / "p.txt", "1 2\n3 18446744073709551616\n"))
        assert excinfo.value.line == 2
