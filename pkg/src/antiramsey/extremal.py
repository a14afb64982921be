"""Colorings with many colors and no t edge-disjoint rainbow spanning trees."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .graph import ColoredMultigraph, GraphError, VertexPartition, classify_edges
from .rainbow import DEFAULT_BUDGET, find_edge_disjoint_rainbow_trees


def extremal_coloring(G: ColoredMultigraph, t: int, P: VertexPartition) -> ColoredMultigraph:
    """Avoiding coloring with |E(P,G)| + t(|P|-2) colors.

    Color 0 is the shared crossing color; colors ``1..t(|P|-2)-1`` go one
    each to the lowest-id crossing edges; every non-crossing edge then gets
    its own color, in edge-id order. Each rainbow spanning tree needs
    |P|-2 crossing edges outside color 0, and only t(|P|-2)-1 exist.
    """
    if P.block_count < 3:
        raise GraphError(f"partition has {P.block_count} blocks; at least 3 are needed")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    crossing, noncrossing = classify_edges(G, P)
    distinct = t * (P.block_count - 2) - 1
    if len(crossing) < distinct + 1:
        raise GraphError(
            f"only {len(crossing)} crossing edges; the construction needs {distinct + 1}"
        )
    colors = [0] * G.m
    for k, e in enumerate(sorted(crossing)[:distinct], start=1):
        colors[e] = k
    for k, e in enumerate(sorted(noncrossing), start=distinct + 1):
        colors[e] = k
    return G.with_colors(colors)


def rainbow_coloring(G: ColoredMultigraph) -> ColoredMultigraph:
    return G.with_colors(range(G.m))


def certify_avoiding(G: ColoredMultigraph, t: int, budget: int = DEFAULT_BUDGET) -> bool:
    """True iff the complete search proves G has no t edge-disjoint rainbow spanning trees."""
    found, _ = find_edge_disjoint_rainbow_trees(G, t, budget)
    return not found


def class_splits(G: ColoredMultigraph) -> Iterator[ColoredMultigraph]:
    """Every coloring obtained by splitting one color class into two non-empty parts.

    The part containing the class's lowest edge keeps the old color; the other
    part gets the new color ``G.num_colors``.
    """
    colors = list(G.colors)
    fresh = G.num_colors
    for c in range(fresh):
        members = [e for e, x in enumerate(colors) if x == c]
        rest = members[1:]
        for size in range(1, len(rest) + 1):
            for moved in combinations(rest, size):
                out = list(colors)
                for e in moved:
                    out[e] = fresh
                yield G.with_colors(out)
