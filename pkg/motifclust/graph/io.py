"""Edge-list and community file ingestion (SNAP-compatible, plain or gzip)."""

from __future__ import annotations

import gzip
import io
import os
from typing import IO, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.exceptions import GraphFormatError, InputError
from ..core.types import CommunitySet, Partition
from ..utils.config import DEFAULT_MIN_COMMUNITY_SIZE
from ..utils.logger import get_logger
from .graph import Graph

logger = get_logger("graph.io")

PathLike = Union[str, os.PathLike]

_GZIP_MAGIC = b"\x1f\x8b"

_LABEL_MIN = int(np.iinfo(np.int64).min)
_LABEL_MAX = int(np.iinfo(np.int64).max)


class NodeIdMap:
    """Bijection between external integer labels and dense ids 0..n-1.

    Dense ids follow ascending label order, so the mapping (and the canonical
    edge order built on it) does not depend on the order of input lines.
    """

    __slots__ = ("_labels",)

    def __init__(self, labels: Sequence[int]):
        values = np.asarray(labels, dtype=np.int64)
        if values.size and np.any(values[1:] <= values[:-1]):
            values = np.unique(values)
        values = np.array(values, copy=True)
        values.setflags(write=False)
        self._labels = values

    @classmethod
    def identity(cls, node_count: int) -> "NodeIdMap":
        return cls(np.arange(node_count, dtype=np.int64))

    @property
    def labels(self) -> np.ndarray:
        return self._labels

    def __len__(self) -> int:
        return int(self._labels.shape[0])

    def to_dense(self, labels: Sequence[int]) -> np.ndarray:
        """Dense ids for labels; unknown labels map to -1."""
        values = np.asarray(labels, dtype=np.int64)
        if self._labels.shape[0] == 0:
            return np.full(values.shape, -1, dtype=np.int64)
        pos = np.searchsorted(self._labels, values)
        pos_clipped = np.minimum(pos, self._labels.shape[0] - 1)
        found = self._labels[pos_clipped] == values
        return np.where(found, pos_clipped, -1).astype(np.int64)

    def to_label(self, dense: Union[int, Sequence[int]]) -> Union[int, np.ndarray]:
        if np.isscalar(dense):
            return int(self._labels[int(dense)])
        return self._labels[np.asarray(dense, dtype=np.int64)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NodeIdMap):
            return NotImplemented
        return bool(np.array_equal(self._labels, other._labels))

    def __repr__(self) -> str:
        return f"NodeIdMap(size={len(self)})"


def open_input(path: PathLike) -> IO[str]:
    """Open a plain or gzip-compressed text file for reading."""
    try:
        with open(path, "rb") as probe:
            magic = probe.read(2)
        if magic == _GZIP_MAGIC:
            return io.TextIOWrapper(gzip.open(path, "rb"), encoding="ascii", errors="strict")
        return open(path, encoding="ascii", errors="strict")
    except OSError as e:
        raise InputError(str(path), reason=f"cannot read file ({e.strerror or e})")


def open_output(path: PathLike) -> IO[str]:
    try:
        if str(path).endswith(".gz"):
            return io.TextIOWrapper(gzip.open(path, "wb"), encoding="ascii")
        return open(path, "w", encoding="ascii")
    except OSError as e:
        raise InputError(str(path), reason=f"cannot write file ({e.strerror or e})")


def _parse_label(token: str, path: PathLike, line_no: int) -> int:
    try:
        label = int(token)
    except ValueError:
        raise GraphFormatError(f"non-integer node label {token!r}", path=str(path), line=line_no)
    if not _LABEL_MIN <= label <= _LABEL_MAX:
        raise GraphFormatError(
            f"node label {token} outside the 64-bit integer range", path=str(path), line=line_no
        )
    return label


def read_edge_pairs(path: PathLike) -> Tuple[np.ndarray, np.ndarray]:
    """Raw (label, label) pairs in file order; comment and blank lines skipped."""
    src: List[int] = []
    dst: List[int] = []
    with open_input(path) as handle:
        try:
            for line_no, line in enumerate(handle, start=1):
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                tokens = stripped.split()
                if len(tokens) < 2:
                    raise GraphFormatError(
                        "expected two node labels per line", path=str(path), line=line_no
                    )
                src.append(_parse_label(tokens[0], path, line_no))
                dst.append(_parse_label(tokens[1], path, line_no))
        except UnicodeDecodeError:
            raise GraphFormatError("file is not ASCII text", path=str(path))
    return np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)


def load_edge_list(
    path: PathLike,
    *,
    dedup: bool = True,
    drop_self_loops: bool = True,
) -> Tuple[Graph, NodeIdMap]:
    """Load a whitespace-separated edge list into a simple undirected graph.

    With dedup=False a repeated edge is a format error; with
    drop_self_loops=False a self-loop is a format error. Labels that only occur
    on dropped self-loops still become (isolated) nodes.
    """
    src_labels, dst_labels = read_edge_pairs(path)
    if src_labels.size == 0:
        logger.debug(f"{path}: no edges, empty graph")
        return Graph.empty(0), NodeIdMap(np.zeros(0, dtype=np.int64))

    id_map = NodeIdMap(np.unique(np.concatenate((src_labels, dst_labels))))
    src = id_map.to_dense(src_labels)
    dst = id_map.to_dense(dst_labels)
    n = len(id_map)

    loops = src == dst
    if np.any(loops) and not drop_self_loops:
        raise GraphFormatError(
            f"self-loop on label {int(src_labels[loops][0])}", path=str(path)
        )
    if not dedup:
        keys = np.minimum(src, dst)[~loops] * n + np.maximum(src, dst)[~loops]
        if np.unique(keys).shape[0] != keys.shape[0]:
            raise GraphFormatError("duplicate edge", path=str(path))

    graph = Graph.from_edges(n, src, dst)
    logger.debug(
        f"loaded {path}: n={graph.node_count} m={graph.edge_count} "
        f"(lines={src_labels.size}, self_loops={int(loops.sum())})"
    )
    return graph, id_map


def load_communities(
    path: PathLike,
    id_map: NodeIdMap,
    min_size: int = DEFAULT_MIN_COMMUNITY_SIZE,
) -> CommunitySet:
    """Load one community per line; unknown labels are skipped and counted."""
    communities: List[np.ndarray] = []
    unknown = 0
    dropped = 0
    with open_input(path) as handle:
        try:
            for line_no, line in enumerate(handle, start=1):
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                labels = [_parse_label(token, path, line_no) for token in stripped.split()]
                dense = id_map.to_dense(labels)
                unknown += int(np.count_nonzero(dense < 0))
                members = np.unique(dense[dense >= 0])
                if members.shape[0] < min_size:
                    dropped += 1
                    continue
                communities.append(members)
        except UnicodeDecodeError:
            raise GraphFormatError("file is not ASCII text", path=str(path))

    if unknown:
        logger.warning(f"{path}: skipped {unknown} community labels absent from the graph")
    logger.debug(f"{path}: kept {len(communities)} communities, dropped {dropped} below size {min_size}")
    return CommunitySet(communities, unknown_labels=unknown, dropped_small=dropped)


def read_partition(path: PathLike, id_map: Optional[NodeIdMap] = None) -> Tuple[CommunitySet, NodeIdMap]:
    """Read a partition file (one community per line) as disjoint node sets.

    Without an id map, the map is built from the labels in the file.
    """
    rows: List[List[int]] = []
    with open_input(path) as handle:
        try:
            for line_no, line in enumerate(handle, start=1):
                stripped = line.strip()
                if not stripped or stripped.startswith("#"):
                    continue
                rows.append([_parse_label(token, path, line_no) for token in stripped.split()])
        except UnicodeDecodeError:
            raise GraphFormatError("file is not ASCII text", path=str(path))
    if id_map is None:
        flat = np.fromiter((label for row in rows for label in row), dtype=np.int64)
        id_map = NodeIdMap(np.unique(flat))
    unknown = 0
    communities = []
    for row in rows:
        dense = id_map.to_dense(row)
        unknown += int(np.count_nonzero(dense < 0))
        members = dense[dense >= 0]
        if members.shape[0]:
            communities.append(members)
    predicted = CommunitySet(communities, unknown_labels=unknown)
    if not predicted.is_disjoint():
        raise GraphFormatError("partition communities overlap", path=str(path))
    return predicted, id_map


def write_edge_list(path: PathLike, g: Graph, id_map: Optional[NodeIdMap] = None, header: Optional[str] = None) -> None:
    """Write canonical edges as '<u> <v>' lines using external labels."""
    us, vs = g.canonical_edges()
    if id_map is not None:
        us, vs = id_map.to_label(us), id_map.to_label(vs)
    with open_output(path) as handle:
        if header:
            for line in header.splitlines():
                handle.write(f"# {line}\n")
        _write_rows(handle, np.column_stack((us, vs)) if us.size else np.zeros((0, 2), dtype=np.int64))


def write_partition(
    path: PathLike,
    partition: Partition,
    id_map: Optional[NodeIdMap] = None,
    include_singletons: bool = True,
) -> int:
    """Write one community per line ordered by representative id; returns lines written."""
    written = 0
    with open_output(path) as handle:
        for members in partition.communities(include_singletons=include_singletons):
            labels = id_map.to_label(members) if id_map is not None else members
            handle.write(" ".join(str(int(label)) for label in labels))
            handle.write("\n")
            written += 1
    return written


def _write_rows(handle: IO[str], rows: np.ndarray) -> None:
    buffer = io.StringIO()
    np.savetxt(buffer, rows, fmt="%d", delimiter=" ")
    handle.write(buffer.getvalue())

