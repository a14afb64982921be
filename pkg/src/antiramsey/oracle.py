"""r(G, t) straight from the definition, by enumerating edge colorings.

Colorings are set partitions of the edge set (one representative per color
renaming). The number of colors descends from |E|; the first count with an
avoiding coloring is the answer, since merging two classes of an avoiding
coloring keeps it avoiding.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import ColoredMultigraph
from .partitions import partition_batches
from .rainbow import DEFAULT_BUDGET, find_edge_disjoint_rainbow_trees

DEFAULT_MAX_EDGES = 10


class OracleCapExceeded(ValueError):
    def __init__(self, m: int, cap: int):
        super().__init__(f"{m} edges exceed the coloring enumeration cap of {cap}")
        self.m = m
        self.cap = cap


@dataclass(frozen=True)
class OracleResult:
    """``value`` is None when every coloring contains the t trees."""

    value: int | None
    witness: ColoredMultigraph | None
    t: int

    @property
    def kind(self) -> str:
        # same vocabulary as the partition solver's branches
        if self.value is None:
            return "NoAvoidingColoring"
        if self.value == self.witness.m:
            return "PackingInfeasible"
        return "PartitionMax"

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "kind": self.kind,
            "t": self.t,
            "witness": None if self.witness is None else list(self.witness.colors),
        }


def enumerate_colorings(G: ColoredMultigraph, min_colors: int = 1, max_colors: int | None = None, *,
                        max_edges: int = DEFAULT_MAX_EDGES) -> Iterator[ColoredMultigraph]:
    """One coloring per set partition of the edges into ``min..max`` classes."""
    if G.m > max_edges:
        raise OracleCapExceeded(G.m, max_edges)
    if G.m == 0:
        if min_colors <= 0:
            yield G.with_colors([])
        return
    if max_colors is None:
        max_colors = G.m
    min_colors = max(min_colors, 1)
    if min_colors > min(max_colors, G.m):
        return
    for batch in partition_batches(G.m, min_colors, min(max_colors, G.m), max_n=max_edges):
        for row in batch.labels.tolist():
            yield G.with_colors(row)


def r_oracle(G: ColoredMultigraph, t: int, *, max_edges: int = DEFAULT_MAX_EDGES,
             budget: int = DEFAULT_BUDGET) -> OracleResult:
    if G.m > max_edges:
        raise OracleCapExceeded(G.m, max_edges)
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    G = G.uncolored()
    for k in range(G.m, -1, -1):
        for coloring in enumerate_colorings(G, k, k, max_edges=max_edges):
            found, _ = find_edge_disjoint_rainbow_trees(coloring, t, budget)
            if not found:
                return OracleResult(k, coloring, t)
    return OracleResult(None, None, t)
