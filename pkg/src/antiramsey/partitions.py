"""Enumeration of vertex set partitions and reductions over them.

Partitions are produced as restricted growth strings (RGS) in lexicographic
order, in numpy chunks of rows. Every reduction here walks that order, so
"first attaining partition" is well defined and stable.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .graph import ColoredMultigraph, GraphError, VertexPartition

DEFAULT_MAX_N = 14
CHUNK_ROWS = 1 << 16


class PartitionCapExceeded(ValueError):
    """Exhaustive partition enumeration refused for too many vertices."""

    def __init__(self, n: int, cap: int):
        super().__init__(
            f"n={n} exceeds the exhaustive enumeration cap of {cap} vertices; "
            "use the closed-form operations or raise the cap explicitly"
        )
        self.n = n
        self.cap = cap


class NoPartitionInRange(ValueError):
    """The requested block-count range contains no partition."""


@dataclass(frozen=True)
class PartitionBatch:
    """A run of consecutive partitions in canonical order.

    ``labels`` has shape ``(k, n)``; ``offset`` is the canonical index of the
    first row among the partitions in the enumerated range.
    """

    labels: np.ndarray
    block_counts: np.ndarray
    offset: int = 0

    def __len__(self) -> int:
        return len(self.labels)

    def partition(self, i: int) -> VertexPartition:
        return VertexPartition(tuple(int(x) for x in self.labels[i]))


def check_cap(n: int, max_n: int | None) -> None:
    cap = DEFAULT_MAX_N if max_n is None else max_n
    if n > cap:
        raise PartitionCapExceeded(n, cap)


def _check_range(n: int, min_blocks: int, max_blocks: int) -> None:
    if n < 0:
        raise ValueError(f"negative vertex count {n}")
    if n == 0:
        if min_blocks > 0:
            raise ValueError("the empty set only has the 0-block partition")
        return
    if not 1 <= min_blocks <= max_blocks:
        raise ValueError(f"invalid block range [{min_blocks}, {max_blocks}]")


def _grow(rows: np.ndarray, tops: np.ndarray, pos: int, n: int, lo: int, hi: int):
    """Fill column ``pos`` in every admissible way, keeping lexicographic order."""
    counts = tops + 2  # values 0..top+1
    reps = np.repeat(np.arange(len(rows)), counts)
    starts = np.repeat(np.cumsum(counts) - counts, counts)
    value = np.arange(len(reps)) - starts
    out = rows[reps]
    out[:, pos] = value
    new_tops = np.maximum(tops[reps], value)
    remaining = n - pos - 1
    keep = (new_tops + 1 <= hi) & (new_tops + 1 + remaining >= lo)
    return out[keep], new_tops[keep]


def _chunks(rows, tops, pos, n, lo, hi, target) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    while pos < n:
        if len(rows) > target:
            for s in range(0, len(rows), target):
                yield from _chunks(rows[s:s + target], tops[s:s + target], pos, n, lo, hi, target)
            return
        rows, tops = _grow(rows, tops, pos, n, lo, hi)
        pos += 1
    if len(rows):
        yield rows, tops + 1


def partition_batches(n: int, min_blocks: int = 1, max_blocks: int | None = None, *,
                      max_n: int | None = None, chunk_rows: int = CHUNK_ROWS) -> Iterator[PartitionBatch]:
    """Yield all partitions of ``0..n-1`` with block count in range, chunked."""
    if max_blocks is None:
        max_blocks = n
    _check_range(n, min_blocks, max_blocks)
    check_cap(n, max_n)
    if n == 0:
        yield PartitionBatch(np.zeros((1, 0), dtype=np.int8), np.zeros(1, dtype=np.int64))
        return
    rows = np.zeros((1, n), dtype=np.int8)
    tops = np.zeros(1, dtype=np.int64)
    if min_blocks > n:
        return
    offset = 0
    for labels, counts in _chunks(rows, tops, 1, n, min_blocks, max_blocks, chunk_rows):
        yield PartitionBatch(labels, counts, offset)
        offset += len(labels)


def enumerate_partitions(n: int, min_blocks: int = 1, max_blocks: int | None = None, *,
                         max_n: int | None = None) -> Iterator[VertexPartition]:
    """Every set partition of ``0..n-1`` with ``min_blocks <= |P| <= max_blocks``.

    >>> [str(p) for p in enumerate_partitions(3, 2, 2)]
    ['0,1|2', '0,2|1', '0|1,2']
    """
    for batch in partition_batches(n, min_blocks, max_blocks, max_n=max_n):
        for row in batch.labels.tolist():
            yield VertexPartition(tuple(row))


def common_refinement(P1: VertexPartition, P2: VertexPartition) -> VertexPartition:
    if P1.n != P2.n:
        raise GraphError(f"partitions of {P1.n} and {P2.n} vertices")
    return VertexPartition.from_labels(zip(P1.labels, P2.labels))


# Objectives take the host graph and a batch and return one score per row.
Objective = Callable[[ColoredMultigraph, PartitionBatch], np.ndarray]


def noncrossing_mask(G: ColoredMultigraph, labels: np.ndarray) -> np.ndarray:
    """Boolean ``(k, m)`` array: edge j is non-crossing in partition row i."""
    u, v = G.endpoint_arrays()
    return labels[:, u] == labels[:, v]


def noncrossing_count(G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
    return noncrossing_mask(G, batch.labels).sum(axis=1)


def crossing_count(G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
    return G.m - noncrossing_count(G, batch)


def block_count(G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
    return batch.block_counts


@dataclass(frozen=True)
class PartitionBonus:
    """Score ``|E(P,G)| + t(|P| - shift)``; picklable for worker pools."""

    t: int
    shift: int = 2

    def __call__(self, G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
        return noncrossing_count(G, batch) + self.t * (batch.block_counts - self.shift)


def _best_in_batch(G, objective, batch: PartitionBatch):
    scores = np.asarray(objective(G, batch))
    i = int(np.argmax(scores))
    return scores[i].item(), batch.offset + i, tuple(int(x) for x in batch.labels[i])


def maximize_over_partitions(G: ColoredMultigraph, objective: Objective, min_blocks: int = 1,
                             max_blocks: int | None = None, *, max_n: int | None = None,
                             jobs: int = 1) -> tuple[int, VertexPartition]:
    """Exact maximum of ``objective`` and the canonically first maximizer.

    With ``jobs > 1`` the chunks are scored in a process pool; the merge keeps
    (score desc, canonical index asc), so the answer matches a sequential run.
    """
    n = G.n
    if max_blocks is None:
        max_blocks = n
    if n < min_blocks or min_blocks > max_blocks:
        raise NoPartitionInRange(f"no partition of {n} vertices has {min_blocks}..{max_blocks} blocks")
    batches = partition_batches(n, min_blocks, max_blocks, max_n=max_n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_best_in_batch, *zip(*((G, objective, b) for b in batches))))
    else:
        results = [_best_in_batch(G, objective, b) for b in batches]
    if not results:
        raise NoPartitionInRange(f"no partition of {n} vertices has {min_blocks}..{max_blocks} blocks")
    score, _, labels = min(results, key=lambda r: (-r[0], r[1]))
    return score, VertexPartition(labels)


def find_violation(G: ColoredMultigraph, deficit: Objective, min_blocks: int = 1,
                   max_blocks: int | None = None, *, strongest: bool = False,
                   max_n: int | None = None) -> tuple[int, VertexPartition] | None:
    """Locate a partition with positive ``deficit``.

    Returns the canonically first one, or with ``strongest`` the one of
    largest deficit (ties to canonical order); ``None`` if there is none.
    """
    n = G.n
    if max_blocks is None:
        max_blocks = n
    if n < min_blocks:
        return None
    best = None
    for batch in partition_batches(n, min_blocks, max_blocks, max_n=max_n):
        d = np.asarray(deficit(G, batch))
        if strongest:
            i = int(np.argmax(d))
            if d[i] > 0 and (best is None or d[i] > best[0]):
                best = (int(d[i]), batch.partition(i))
        else:
            hits = np.flatnonzero(d > 0)
            if len(hits):
                i = int(hits[0])
                return int(d[i]), batch.partition(i)
    return best
