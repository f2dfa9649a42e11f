"""Worker pools used by the edge-, source- and threshold-parallel loops.

parallel_map runs numpy-heavy chunks on threads. process_map runs chunks of
interpreted Python (Brandes sweeps, per-edge clique counting) in worker
processes so they are not serialized on the GIL.

Chunk boundaries are always computed from the data alone, never from the worker
count, and results come back in chunk order. Any reduction over chunk results
is therefore performed in the same order for every worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator, List, Optional, Sequence, Tuple, TypeVar

import numpy as np

from .config import get_default_threads

T = TypeVar("T")
R = TypeVar("R")

_num_workers: Optional[int] = None

# (fn, shared) installed once in every worker process
_task: Optional[Tuple[Callable[[Any, Any], Any], Any]] = None


def set_num_workers(workers: Optional[int]) -> int:
    """Set the worker count used by parallel_map; None re-resolves the default."""
    global _num_workers
    _num_workers = get_default_threads(workers) if workers is not None else None
    return get_num_workers()


def get_num_workers() -> int:
    """Current worker count (flag > MOTIFCLUST_THREADS > all cores)."""
    if _num_workers is None:
        return get_default_threads()
    return _num_workers


@contextmanager
def num_workers(workers: int) -> Iterator[int]:
    """Temporarily run with a fixed worker count."""
    global _num_workers
    previous = _num_workers
    set_num_workers(workers)
    try:
        yield get_num_workers()
    finally:
        _num_workers = previous


def parallel_map(fn: Callable[[T], R], items: Iterable[T], workers: Optional[int] = None) -> List[R]:
    """Apply fn to every item; results are returned in input order."""
    items = list(items)
    workers = workers or get_num_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(fn, items))


def _install_task(fn: Callable[[Any, Any], Any], shared: Any) -> None:
    global _task
    _task = (fn, shared)


def _run_task(item: Any) -> Any:
    assert _task is not None
    fn, shared = _task
    return fn(shared, item)


def process_map(
    fn: Callable[[Any, T], R],
    items: Iterable[T],
    shared: Any,
    workers: Optional[int] = None,
) -> List[R]:
    """Apply fn(shared, item) to every item in worker processes; results in input order.

    fn must be a module-level function. shared is sent to each worker once, at
    pool start-up, instead of with every item.
    """
    items = list(items)
    workers = workers or get_num_workers()
    if workers <= 1 or len(items) <= 1:
        return [fn(shared, item) for item in items]
    with Pool(processes=min(workers, len(items)), initializer=_install_task, initargs=(fn, shared)) as pool:
        return pool.map(_run_task, items, chunksize=1)


def balanced_ranges(weights: np.ndarray, target: int) -> List[Tuple[int, int]]:
    """Split positions 0..len(weights) into contiguous ranges of roughly `target` total weight.

    Used to cut node ranges so that each chunk covers about the same number of
    adjacency slots. The split depends only on the weights.
    """
    count = len(weights)
    if count == 0:
        return []
    target = max(int(target), 1)
    cumulative = np.cumsum(weights, dtype=np.int64)
    total = int(cumulative[-1])
    if total <= target:
        return [(0, count)]
    cuts = np.searchsorted(cumulative, np.arange(target, total, target, dtype=np.int64), side="left")
    bounds = np.unique(np.concatenate(([0], cuts + 1, [count])))
    bounds = bounds[bounds <= count]
    return [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def fixed_ranges(total: int, size: int) -> List[Tuple[int, int]]:
    """Split 0..total into consecutive ranges of `size` (the last one may be shorter)."""
    size = max(int(size), 1)
    return [(lo, min(lo + size, total)) for lo in range(0, total, size)]


def chunked(items: Sequence[T], size: int) -> List[Sequence[T]]:
    """Divide a sequence into consecutive chunks of `size` items."""
    return [items[lo:hi] for lo, hi in fixed_ranges(len(items), size)]
