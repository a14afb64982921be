"""Colored multigraphs, vertex partitions and the crossing decomposition.

Vertices are ``0..n-1``. Parallel edges are distinct edge ids; loops are
rejected. Colors are dense integer ids ``0..k-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Sequence

import numpy as np


class GraphError(ValueError):
    """Malformed graph, coloring or partition."""


class Edge(NamedTuple):
    u: int
    v: int
    color: int | None = None


@dataclass(frozen=True)
class ColoredMultigraph:
    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        edges = tuple(Edge(*e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        used = set()
        for i, (u, v, c) in enumerate(edges):
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {i} ({u},{v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"edge {i} is a loop at vertex {u}")
            if c is not None:
                if c < 0:
                    raise GraphError(f"edge {i} has negative color {c}")
                used.add(c)
        if used and used != set(range(len(used))):
            raise GraphError(f"color ids {sorted(used)} are not contiguous from 0")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[Sequence[int]], colors: Sequence[int] | None = None):
        pairs = [tuple(p) for p in pairs]
        if colors is None:
            return cls(n, tuple(Edge(u, v) for u, v in pairs))
        if len(colors) != len(pairs):
            raise GraphError(f"{len(colors)} colors given for {len(pairs)} edges")
        return cls(n, tuple(Edge(u, v, c) for (u, v), c in zip(pairs, colors)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def num_colors(self) -> int:
        cs = [e.color for e in self.edges if e.color is not None]
        return max(cs) + 1 if cs else 0

    @property
    def is_colored(self) -> bool:
        """True when every edge carries a color (vacuously for edgeless graphs)."""
        return all(e.color is not None for e in self.edges)

    @property
    def colors(self) -> tuple[int, ...]:
        if not self.is_colored:
            raise GraphError("graph has uncolored edges")
        return tuple(e.color for e in self.edges)

    def pairs(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges]

    def endpoint_arrays(self) -> tuple[np.ndarray, np.ndarray]:
        if not self.edges:
            return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp)
        uv = np.array(self.pairs(), dtype=np.intp)
        return uv[:, 0], uv[:, 1]

    def uncolored(self) -> ColoredMultigraph:
        return ColoredMultigraph(self.n, tuple(Edge(e.u, e.v) for e in self.edges))

    def with_colors(self, colors: Sequence[int]) -> ColoredMultigraph:
        return ColoredMultigraph.from_edges(self.n, self.pairs(), colors)

    def subgraph(self, edge_ids: Iterable[int], recolor: bool = True) -> ColoredMultigraph:
        """Spanning subgraph on the given edge ids (in increasing id order).

        With ``recolor`` the surviving colors are renumbered densely, keeping
        their relative order.
        """
        ids = sorted(set(edge_ids))
        kept = [self.edges[i] for i in ids]
        if recolor and kept and all(e.color is not None for e in kept):
            remap = {c: j for j, c in enumerate(sorted({e.color for e in kept}))}
            kept = [Edge(e.u, e.v, remap[e.color]) for e in kept]
        return ColoredMultigraph(self.n, tuple(kept))

    def add_edge(self, u: int, v: int, color: int | None = None) -> ColoredMultigraph:
        return ColoredMultigraph(self.n, self.edges + (Edge(u, v, color),))


def complete_graph(n: int) -> ColoredMultigraph:
    return ColoredMultigraph.from_edges(n, combinations(range(n), 2))


def complete_multipartite(parts: Sequence[int]) -> ColoredMultigraph:
    """Explicit K_{n_1,...,n_r}; vertices of part i are consecutive."""
    owner = [i for i, size in enumerate(parts) for _ in range(size)]
    n = len(owner)
    pairs = [(a, b) for a, b in combinations(range(n), 2) if owner[a] != owner[b]]
    return ColoredMultigraph.from_edges(n, pairs)


def rainbow(G: ColoredMultigraph) -> ColoredMultigraph:
    return G.with_colors(range(G.m))


@dataclass(frozen=True)
class VertexPartition:
    """A set partition of ``0..n-1`` stored as its restricted growth string.

    ``labels[v]`` is the block of vertex ``v``; blocks are numbered by first
    appearance, so ``labels[0] == 0`` and each label is at most one more than
    every label before it.
    """

    labels: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(int(x) for x in self.labels)
        top = -1
        for x in labels:
            if x < 0 or x > top + 1:
                raise GraphError(f"{labels} is not a restricted growth string")
            top = max(top, x)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_labels(cls, labels: Iterable[int]) -> VertexPartition:
        """Canonicalize an arbitrary block assignment."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(x, len(remap)) for x in labels))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> VertexPartition:
        blocks = [list(b) for b in blocks]
        members = [v for b in blocks for v in b]
        if n is None:
            n = len(members)
        if sorted(members) != list(range(n)):
            raise GraphError(f"blocks {blocks} do not partition 0..{n - 1}")
        owner = [0] * n
        for i, b in enumerate(blocks):
            for v in b:
                owner[v] = i
        return cls.from_labels(owner)

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> VertexPartition:
        """Parse ``"0,1|2|3"``."""
        try:
            blocks = [[int(x) for x in part.split(",")] for part in text.strip().split("|")]
        except ValueError as exc:
            raise GraphError(f"bad partition {text!r}") from exc
        return cls.from_blocks(blocks, n)

    @classmethod
    def singletons(cls, n: int) -> VertexPartition:
        return cls(tuple(range(n)))

    @classmethod
    def whole(cls, n: int) -> VertexPartition:
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def block_count(self) -> int:
        return max(self.labels) + 1 if self.labels else 0

    def __len__(self) -> int:
        return self.block_count

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.block_count)]
        for v, b in enumerate(self.labels):
            out[b].append(v)
        return out

    def __str__(self) -> str:
        return "|".join(",".join(map(str, b)) for b in self.blocks())


@dataclass(frozen=True)
class PartitionStats:
    noncrossing_edges: int
    crossing_edges: int
    noncrossing_colors: int
    crossing_colors: int
    eta: int
    xi: int


def _check_sizes(G: ColoredMultigraph, P: VertexPartition) -> None:
    if P.n != G.n:
        raise GraphError(f"partition covers {P.n} vertices but the graph has {G.n}")


def classify_edges(G: ColoredMultigraph, P: VertexPartition) -> tuple[frozenset[int], frozenset[int]]:
    """Return ``(crossing, noncrossing)`` edge-id sets."""
    _check_sizes(G, P)
    lab = P.labels
    crossing = frozenset(i for i, e in enumerate(G.edges) if lab[e.u] != lab[e.v])
    return crossing, frozenset(range(G.m)) - crossing


def partition_stats(G: ColoredMultigraph, P: VertexPartition) -> PartitionStats:
    crossing, noncrossing = classify_edges(G, P)
    colors = G.colors
    cr_colors = {colors[i] for i in crossing}
    nc_colors = {colors[i] for i in noncrossing}
    return PartitionStats(
        noncrossing_edges=len(noncrossing),
        crossing_edges=len(crossing),
        noncrossing_colors=len(nc_colors),
        crossing_colors=len(cr_colors),
        eta=len(noncrossing) - len(nc_colors),
        xi=len(nc_colors & cr_colors),
    )


@dataclass(frozen=True)
class BlockSubgraph:
    graph: ColoredMultigraph
    vertices: tuple[int, ...]  # local vertex i is global vertex vertices[i]
    edge_ids: tuple[int, ...]  # local edge j is global edge edge_ids[j]
    colors: tuple[int, ...] = ()  # local color c is global color colors[c]


def restrict_to_blocks(G: ColoredMultigraph, P: VertexPartition) -> list[BlockSubgraph]:
    """Induced sub-multigraph of every block, relabelled to local ids."""
    _check_sizes(G, P)
    out = []
    for block in P.blocks():
        local = {v: i for i, v in enumerate(block)}
        ids = [i for i, e in enumerate(G.edges) if e.u in local and e.v in local]
        inside = [G.edges[i] for i in ids]
        global_colors = sorted({e.color for e in inside if e.color is not None})
        cmap = {c: j for j, c in enumerate(global_colors)}
        edges = tuple(
            Edge(local[e.u], local[e.v], None if e.color is None else cmap[e.color]) for e in inside
        )
        out.append(BlockSubgraph(ColoredMultigraph(len(block), edges), tuple(block), tuple(ids),
                                 tuple(global_colors)))
    return out
