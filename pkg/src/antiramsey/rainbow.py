"""Rainbow spanning trees in edge-colored multigraphs.

Two kinds of deciders live here. The partition criteria
(:func:`has_color_disjoint_trees`, :func:`extension_feasible`) scan vertex
partitions; the backtracking searches (:func:`find_edge_disjoint_rainbow_trees`
and friends) build trees edge by edge and know nothing about partitions, so
each side can be used to check the other.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import ColoredMultigraph, GraphError, VertexPartition
from .partitions import PartitionBatch, find_violation, noncrossing_mask

DEFAULT_BUDGET = 10**8


class SearchBudgetExceeded(RuntimeError):
    """The backtracking search hit its node limit; the answer is unknown."""

    def __init__(self, budget: int):
        super().__init__(f"search exceeded its budget of {budget} nodes")
        self.budget = budget


@dataclass(frozen=True)
class ForestFamily:
    """Edge-id sets F_1..F_t over one host graph."""

    forests: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "forests", tuple(tuple(sorted(f)) for f in self.forests))

    @classmethod
    def empty(cls, t: int) -> ForestFamily:
        return cls(((),) * t)

    @property
    def t(self) -> int:
        return len(self.forests)

    def edge_ids(self) -> set[int]:
        return {e for f in self.forests for e in f}

    def colors(self, G: ColoredMultigraph) -> set[int]:
        cs = G.colors
        return {cs[e] for f in self.forests for e in f}

    def size(self) -> int:
        return sum(len(f) for f in self.forests)


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def is_forest(G: ColoredMultigraph, edge_ids: Sequence[int]) -> bool:
    parent = list(range(G.n))
    for e in edge_ids:
        a, b = _find(parent, G.edges[e].u), _find(parent, G.edges[e].v)
        if a == b:
            return False
        parent[a] = b
    return True


def is_spanning_tree(G: ColoredMultigraph, edge_ids: Sequence[int]) -> bool:
    return len(edge_ids) == max(G.n - 1, 0) and is_forest(G, edge_ids)


def is_rainbow(G: ColoredMultigraph, edge_ids: Sequence[int]) -> bool:
    cs = [G.edges[e].color for e in edge_ids]
    return None not in cs and len(set(cs)) == len(cs)


def validate_family(G: ColoredMultigraph, F: ForestFamily, *, color_disjoint: bool = False) -> None:
    """Raise :class:`GraphError` unless F is a family of edge-disjoint rainbow forests.

    A color repeated inside one forest is always an error; a color shared by
    two different forests is an error only with ``color_disjoint``.
    """
    seen: set[int] = set()
    owner: dict[int, int] = {}
    for i, f in enumerate(F.forests):
        for e in f:
            if not 0 <= e < G.m:
                raise GraphError(f"forest {i} names unknown edge {e}")
            if e in seen:
                raise GraphError(f"edge {e} lies in two forests")
            seen.add(e)
        if not is_forest(G, f):
            raise GraphError(f"forest {i} contains a cycle")
        if not is_rainbow(G, f):
            raise GraphError(f"forest {i} is not rainbow")
        if color_disjoint:
            for e in f:
                c = G.edges[e].color
                if owner.setdefault(c, i) != i:
                    raise GraphError(f"color {c} appears in forests {owner[c]} and {i}")


# ---------------------------------------------------------------------------
# partition criteria


def crossing_color_count(G: ColoredMultigraph, labels: np.ndarray, edge_ids=None) -> np.ndarray:
    """|c(cr(P,H))| per partition row, for H the spanning subgraph on ``edge_ids``."""
    if edge_ids is None:
        edge_ids = range(G.m)
    edge_ids = list(edge_ids)
    if not edge_ids:
        return np.zeros(len(labels), dtype=np.int64)
    cs = np.array([G.edges[e].color for e in edge_ids], dtype=np.intp)
    uniq, inv = np.unique(cs, return_inverse=True)
    member = np.zeros((len(edge_ids), len(uniq)), dtype=np.int32)
    member[np.arange(len(edge_ids)), inv] = 1
    crossing = ~noncrossing_mask(G, labels)[:, edge_ids]
    return ((crossing.astype(np.int32) @ member) > 0).sum(axis=1)


@dataclass(frozen=True)
class ColorDeficit:
    t: int

    def __call__(self, G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
        return self.t * (batch.block_counts - 1) - crossing_color_count(G, batch.labels)


def has_color_disjoint_trees(G: ColoredMultigraph, t: int, *, max_n: int | None = None):
    """Partition test for t pairwise color-disjoint rainbow spanning trees.

    True iff every partition P sees at least t(|P|-1) colors on its crossing
    edges. On failure the most violated partition is returned.
    """
    G.colors  # fully colored
    hit = find_violation(G, ColorDeficit(t), 1, max(G.n, 1), strongest=True, max_n=max_n)
    if hit is None:
        return True, None
    return False, hit[1]


def residual_edges(G: ColoredMultigraph, F: ForestFamily) -> list[int]:
    used = F.colors(G)
    return [i for i, e in enumerate(G.edges) if e.color not in used]


def residual_graph(G: ColoredMultigraph, F: ForestFamily) -> ColoredMultigraph:
    """G minus every edge whose color appears in F (surviving colors renumbered)."""
    return G.subgraph(residual_edges(G, F))


class Outcome(str, enum.Enum):
    EXTENDABLE = "Extendable"
    BLOCKED = "Blocked"


@dataclass(frozen=True)
class ExtensionCertificate:
    outcome: Outcome
    blocking_partition: VertexPartition | None = None
    lhs: int | None = None
    rhs: int | None = None

    @property
    def extendable(self) -> bool:
        return self.outcome is Outcome.EXTENDABLE

    def as_dict(self) -> dict:
        out = {"outcome": self.outcome.value}
        if self.blocking_partition is not None:
            out.update(blocking_partition=self.blocking_partition.blocks(), lhs=self.lhs, rhs=self.rhs)
        return out


def quotient_rank(G: ColoredMultigraph, labels: np.ndarray, forest: Sequence[int]) -> np.ndarray:
    """Blocks of each partition row merged by ``forest``: the rank of its edges in G/P.

    At most |cr(P,F)|, and smaller when crossing edges of F close a cycle
    once the blocks are contracted.
    """
    comp = labels.astype(np.int16)
    rank = np.zeros(len(labels), dtype=np.int64)
    for e in forest:
        a = comp[:, G.edges[e].u].copy()
        b = comp[:, G.edges[e].v].copy()
        rank += a != b
        comp = np.where(comp == b[:, None], a[:, None], comp)
    return rank


def extension_sides(G: ColoredMultigraph, F: ForestFamily, labels: np.ndarray, *,
                    literal: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Both sides of the extension inequality for each partition row.

    lhs = |c(cr(P,G'))| + sum_i rank of F_i in G/P, rhs = t(|P|-1). With
    ``literal`` the rank is replaced by the raw count |cr(P,F_i)|; that form
    is necessary but can accept a family one forest cannot finish (a star
    crossing P three times covers for a forest crossing it zero times).
    """
    lhs = crossing_color_count(G, labels, residual_edges(G, F))
    crossing = ~noncrossing_mask(G, labels)
    for f in F.forests:
        if f:
            lhs = lhs + (crossing[:, list(f)].sum(axis=1) if literal else quotient_rank(G, labels, f))
    rhs = F.t * (labels.max(axis=1).astype(np.int64))
    return lhs, rhs


@dataclass(frozen=True)
class _ExtensionDeficit:
    F: ForestFamily

    def __call__(self, G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
        lhs, rhs = extension_sides(G, self.F, batch.labels)
        return rhs - lhs


def extension_feasible(G: ColoredMultigraph, F: ForestFamily, *, max_n: int | None = None) -> ExtensionCertificate:
    """Can F be completed to spanning trees using fresh, pairwise distinct colors?

    Decided by the partition inequality; Blocked certificates carry the
    canonically first violating partition and both side values.
    """
    G.colors
    validate_family(G, F)
    hit = find_violation(G, _ExtensionDeficit(F), 1, max(G.n, 1), max_n=max_n)
    if hit is None:
        return ExtensionCertificate(Outcome.EXTENDABLE)
    P = hit[1]
    lhs, rhs = extension_sides(G, F, np.array([P.labels], dtype=np.int8))
    return ExtensionCertificate(Outcome.BLOCKED, P, int(lhs[0]), int(rhs[0]))


# ---------------------------------------------------------------------------
# backtracking search


class _TreeSearch:
    """Include/exclude search for t edge-disjoint spanning trees.

    Trees are grown one at a time; edges are tried in increasing id order,
    taking each edge before skipping it. ``global_colors`` makes all added
    edges share one rainbow constraint (color-disjoint trees); otherwise each
    tree is rainbow on its own.
    """

    def __init__(self, G: ColoredMultigraph, t: int, *, global_colors: bool, budget: int,
                 seeds: Sequence[Sequence[int]] = (), allowed: Sequence[int] | None = None,
                 forbidden_colors: set[int] = frozenset()):
        self.n, self.t = G.n, t
        self.us = [e.u for e in G.edges]
        self.vs = [e.v for e in G.edges]
        self.cbit = [1 << e.color for e in G.edges]
        self.m = G.m
        self.global_colors = global_colors
        self.budget = budget
        self.nodes = 0
        self.seeds = [list(s) for s in seeds] or [[] for _ in range(t)]
        allowed = range(G.m) if allowed is None else allowed
        seeded = {e for s in self.seeds for e in s}
        banned = 0
        for c in forbidden_colors:
            banned |= 1 << c
        self.usable = 0
        for e in allowed:
            if e not in seeded and not self.cbit[e] & banned:
                self.usable |= 1 << e
        self.symmetric = not any(self.seeds)
        self.base_colors = banned

    def run(self) -> list[list[int]] | None:
        self.trees: list[list[int]] = []
        if self._start_tree(0, self.usable, self.base_colors, -1):
            return self.trees
        return None

    def _start_tree(self, j, free, gcolors, prev_first):
        if j == self.t:
            return True
        comp = list(range(self.n))
        tcolors = 0
        seed = self.seeds[j]
        for e in seed:
            a, b = comp[self.us[e]], comp[self.vs[e]]
            comp = [a if x == b else x for x in comp]
            tcolors |= self.cbit[e]
        need = self.n - 1 - len(seed)
        start = prev_first + 1 if self.symmetric else 0
        chosen = list(seed)
        self.trees.append(chosen)
        ok = self._grow(j, start, comp, need, free, tcolors, gcolors, chosen)
        if not ok:
            self.trees.pop()
        return ok

    def _grow(self, j, i, comp, need, free, tcolors, gcolors, chosen):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(self.budget)
        if need == 0:
            first = chosen[0] if chosen else i
            return self._start_tree(j + 1, free, gcolors, first)
        blocked = gcolors if self.global_colors else tcolors
        us, vs, cbit = self.us, self.vs, self.cbit
        # candidates at or after i that could still join this tree
        cands = []
        parent = list(range(self.n))
        merges = 0
        colorset = 0
        rest = free >> i
        e = i
        while rest:
            if rest & 1 and not cbit[e] & blocked:
                a, b = comp[us[e]], comp[vs[e]]
                if a != b:
                    cands.append(e)
                    colorset |= cbit[e]
                    if merges < need:
                        ra, rb = _find(parent, a), _find(parent, b)
                        if ra != rb:
                            parent[ra] = rb
                            merges += 1
            rest >>= 1
            e += 1
        if merges < need or colorset.bit_count() < need:
            return False
        for k, e in enumerate(cands):
            # taking e as the next edge skips every earlier candidate
            a, b = comp[us[e]], comp[vs[e]]
            new_comp = [a if x == b else x for x in comp]
            chosen.append(e)
            if self._grow(j, e + 1, new_comp, need - 1, free & ~(1 << e),
                          tcolors | cbit[e], gcolors | cbit[e], chosen):
                return True
            chosen.pop()
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(self.budget)
            if len(cands) - k - 1 < need:
                break
        return False


def _family(trees) -> ForestFamily:
    return ForestFamily(tuple(tuple(t) for t in trees))


def find_edge_disjoint_rainbow_trees(G: ColoredMultigraph, t: int, budget: int = DEFAULT_BUDGET):
    """Complete search for t edge-disjoint spanning trees, each rainbow.

    Returns ``(found, family)``; colors may repeat across different trees.
    Raises :class:`SearchBudgetExceeded` when the node limit is hit.
    """
    G.colors
    if G.m < t * max(G.n - 1, 0):
        return False, None
    trees = _TreeSearch(G, t, global_colors=False, budget=budget).run()
    return (True, _family(trees)) if trees is not None else (False, None)


def find_color_disjoint_rainbow_trees(G: ColoredMultigraph, t: int, budget: int = DEFAULT_BUDGET):
    """Complete search for t spanning trees whose union is rainbow."""
    G.colors
    if G.num_colors < t * max(G.n - 1, 0):
        return False, None
    trees = _TreeSearch(G, t, global_colors=True, budget=budget).run()
    return (True, _family(trees)) if trees is not None else (False, None)


def find_color_disjoint_extension(G: ColoredMultigraph, F: ForestFamily, budget: int = DEFAULT_BUDGET):
    """Complete search for a color-disjoint extension of F to spanning trees.

    Added edges avoid every color of F and are pairwise distinct in color.
    """
    G.colors
    validate_family(G, F)
    search = _TreeSearch(G, F.t, global_colors=True, budget=budget, seeds=F.forests,
                         allowed=residual_edges(G, F), forbidden_colors=F.colors(G))
    trees = search.run()
    return (True, _family(trees)) if trees is not None else (False, None)


# ---------------------------------------------------------------------------
# greedy seeding of forests from repeated colors


def repeated_color_order(G: ColoredMultigraph) -> list[tuple[int, list[int]]]:
    """Colors of multiplicity >= 2 with their edge ids, most frequent first."""
    by_color: dict[int, list[int]] = {}
    for i, c in enumerate(G.colors):
        by_color.setdefault(c, []).append(i)
    repeated = [(c, ids) for c, ids in by_color.items() if len(ids) >= 2]
    repeated.sort(key=lambda item: (-len(item[1]), item[0]))
    return repeated


def seed_forests(G: ColoredMultigraph, t: int) -> ForestFamily:
    """Distribute edges of repeated colors over t forests.

    If the most frequent color has at least t edges, one of them goes into
    each forest. Otherwise colors are dealt round-robin (forest index wraps
    modulo t) in decreasing multiplicity until the repeated edges run out or
    every forest holds two edges. A placement that would repeat a color or
    close a cycle in its forest moves on to the next forest.
    """
    repeated = repeated_color_order(G)
    if not repeated:
        raise GraphError("no color is repeated; nothing to seed")
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    _, top = repeated[0]
    if len(top) >= t:
        return ForestFamily(tuple((e,) for e in top[:t]))
    forests: list[list[int]] = [[] for _ in range(t)]
    slot = 0
    for _, ids in repeated:
        for e in ids:
            if all(len(f) >= 2 for f in forests):
                return ForestFamily(tuple(forests))
            for step in range(t):
                k = (slot + step) % t
                f = forests[k]
                if len(f) < 2 and is_rainbow(G, f + [e]) and is_forest(G, f + [e]):
                    f.append(e)
                    slot = k + 1
                    break
    return ForestFamily(tuple(forests))


def seed_count_holds(G: ColoredMultigraph, F: ForestFamily) -> bool:
    """sum |F_i| >= t - 1 + |c(F)| and every color used in F repeats in G."""
    mult = Counter(G.colors)
    used = F.colors(G)
    return F.size() >= F.t - 1 + len(used) and all(mult[c] >= 2 for c in used)
