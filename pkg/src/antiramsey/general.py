"""r(G, t) for an arbitrary multigraph by scanning vertex partitions.

r(G,t) = |E(G)| when some partition P has fewer than t(|P|-1) crossing
edges (no t edge-disjoint spanning trees exist), and otherwise
max over |P| >= 3 of |E(P,G)| + t(|P|-2). Edge colors on the input are ignored.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .graph import ColoredMultigraph, VertexPartition
from .partitions import PartitionBatch, PartitionBonus, crossing_count, find_violation, maximize_over_partitions


class Branch(str, enum.Enum):
    PACKING_INFEASIBLE = "PackingInfeasible"
    PARTITION_MAX = "PartitionMax"


class NoAvoidingColoring(Exception):
    """Every coloring of the host contains t edge-disjoint rainbow spanning trees."""


@dataclass(frozen=True)
class AntiRamseyResult:
    value: int
    branch: Branch
    witness: VertexPartition
    t: int

    def as_dict(self) -> dict:
        return {
            "value": self.value,
            "branch": self.branch.value,
            "t": self.t,
            "witness": self.witness.blocks(),
        }


@dataclass(frozen=True)
class PackingDeficit:
    """t(|P|-1) - |cr(P,G)|; positive exactly when the packing bound fails."""

    t: int

    def __call__(self, G: ColoredMultigraph, batch: PartitionBatch) -> np.ndarray:
        return self.t * (batch.block_counts - 1) - crossing_count(G, batch)


def packing_feasible(G: ColoredMultigraph, t: int, *, max_n: int | None = None):
    """Does every partition P have at least t(|P|-1) crossing edges?

    Returns ``(True, None)`` or ``(False, P0)`` where P0 is the most violated
    partition (largest shortfall, then canonical order).
    """
    if G.n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={G.n}, t={t}")
    hit = find_violation(G, PackingDeficit(t), 2, G.n, strongest=True, max_n=max_n)
    if hit is None:
        return True, None
    return False, hit[1]


def r_general(G: ColoredMultigraph, t: int, *, max_n: int | None = None, jobs: int = 1) -> AntiRamseyResult:
    feasible, blocker = packing_feasible(G, t, max_n=max_n)
    if not feasible:
        return AntiRamseyResult(G.m, Branch.PACKING_INFEASIBLE, blocker, t)
    if G.n <= 2:
        raise NoAvoidingColoring(
            f"{G.n}-vertex host with {G.m} edges: every coloring has {t} edge-disjoint rainbow spanning trees"
        )
    value, witness = maximize_over_partitions(G, PartitionBonus(t, 2), 3, G.n, max_n=max_n, jobs=jobs)
    return AntiRamseyResult(int(value), Branch.PARTITION_MAX, witness, t)


def avoiding_coloring_exists(G: ColoredMultigraph, t: int, k: int, *, max_n: int | None = None) -> bool:
    """Is there a k-coloring of G without t edge-disjoint rainbow spanning trees?"""
    if not 1 <= k <= G.m:
        raise ValueError(f"color count {k} outside [1, {G.m}]")
    try:
        return k <= r_general(G, t, max_n=max_n).value
    except NoAvoidingColoring:
        return False
