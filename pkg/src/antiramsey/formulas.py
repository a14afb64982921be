"""Closed-form anti-Ramsey values for complete and complete multipartite hosts."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable

from .graph import VertexPartition

NO_AVOIDING = "no-avoiding-coloring"


@dataclass(frozen=True)
class MultipartiteShape:
    """Part sizes of K_{n_1,...,n_r}, largest first.

    K_n is ``(1,) * n``; a single part is the edgeless graph.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a shape needs at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"part sizes must be positive, got {parts}")
        if list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"part sizes must be non-increasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, parts: Iterable[int]) -> MultipartiteShape:
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def complete(cls, n: int) -> MultipartiteShape:
        return cls((1,) * n)

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def r(self) -> int:
        return len(self.parts)

    @property
    def edge_count(self) -> int:
        return multipartite_edges(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


def multipartite_edges(parts: Iterable[int]) -> int:
    """(n^2 - sum n_i^2) / 2. Also used with a formal negative part size."""
    parts = list(parts)
    n = sum(parts)
    return (n * n - sum(p * p for p in parts)) // 2


def kronecker(a: int, b: int) -> int:
    return 1 if a == b else 0


@dataclass(frozen=True)
class AntiRamseyValue:
    """A closed-form value with the regime that produced it.

    ``value`` is ``None`` when no coloring avoids the t trees at all.
    """

    value: int | None
    branch: tuple[str, ...]
    params: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"value": self.value, "branch": list(self.branch), **self.params}


def _split_sequence(parts: tuple[int, ...], splits: int) -> list[int]:
    """Part indices (into the original shape) losing a vertex at each split."""
    residual = list(parts)
    order = []
    for _ in range(splits):
        # first largest part in the original ordering
        i = max(range(len(residual)), key=lambda j: (residual[j], -j))
        residual[i] -= 1
        order.append(i)
    return order


def f_multipartite(shape: MultipartiteShape, s: int) -> int:
    """Largest number of non-crossing edges over partitions into ``s`` blocks.

    Splits single vertices off a largest part ``s - 1`` times and counts the
    edges left inside the remaining big block.
    """
    if not 1 <= s <= shape.n:
        raise ValueError(f"block count {s} outside [1, {shape.n}]")
    residual = list(shape.parts)
    for _ in range(s - 1):
        i = max(range(len(residual)), key=lambda j: (residual[j], -j))
        residual[i] -= 1
    return multipartite_edges(residual)


def f_multipartite_witness(shape: MultipartiteShape, s: int) -> VertexPartition:
    """A partition of the explicit graph (parts on consecutive vertices) attaining f."""
    if not 1 <= s <= shape.n:
        raise ValueError(f"block count {s} outside [1, {shape.n}]")
    members, start = [], 0
    for size in shape.parts:
        members.append(list(range(start, start + size)))
        start += size
    labels = [0] * shape.n
    for k, i in enumerate(_split_sequence(shape.parts, s - 1), start=1):
        labels[members[i].pop()] = k
    return VertexPartition.from_labels(labels)


def f_profile(shape: MultipartiteShape) -> list[int]:
    """``[f(1), ..., f(n)]`` in one pass of splits."""
    residual = list(shape.parts)
    out = [multipartite_edges(residual)]
    for _ in range(shape.n - 1):
        i = max(range(len(residual)), key=lambda j: (residual[j], -j))
        residual[i] -= 1
        out.append(multipartite_edges(residual))
    return out


def check_concavity(shape: MultipartiteShape) -> bool:
    """Is f(s) - 2 f(s+1) + f(s+2) >= 0 for every 2 <= s <= n-2?"""
    f = f_profile(shape)  # f[s-1] = f(s)
    return all(f[s - 1] - 2 * f[s] + f[s + 1] >= 0 for s in range(2, shape.n - 1))


def _degenerate(n: int, m: int, t: int, params: dict) -> AntiRamseyValue | None:
    # On <= 2 vertices there is no partition with 3 blocks; only the
    # all-edges regime can produce a number.
    if n == 1 or (n == 2 and m >= t):
        return AntiRamseyValue(None, (NO_AVOIDING,), params)
    if n == 2:
        return AntiRamseyValue(m, ("packing-infeasible",), params)
    return None


def r_complete(n: int, t: int) -> AntiRamseyValue:
    """r(K_n, t) by the four-regime formula in n versus 2t."""
    if n < 1 or t < 1:
        raise ValueError(f"need n >= 1 and t >= 1, got n={n}, t={t}")
    params = {"n": n, "t": t}
    degenerate = _degenerate(n, comb(n, 2), t, params)
    if degenerate is not None:
        return degenerate
    if n >= 2 * t + 2:
        return AntiRamseyValue(comb(n - 2, 2) + t, ("n>=2t+2",), params)
    if n == 2 * t + 1:
        return AntiRamseyValue(comb(n - 1, 2), ("n=2t+1",), params)
    if n == 2 * t:
        return AntiRamseyValue(comb(n, 2) - t, ("n=2t",), params)
    return AntiRamseyValue(comb(n, 2), ("n<2t",), params)


def r_multipartite(shape: MultipartiteShape, t: int) -> AntiRamseyValue:
    """r(K_{n_1,...,n_r}, t).

    All edges when t(n-1) > |E| or n - n_1 < t (the branch tag lists every
    condition that holds); otherwise the larger of t(n-2) and
    |E(K_{n_1-2,n_2,...})| + t + [n_1 == n_2].
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    n, m, parts = shape.n, shape.edge_count, shape.parts
    params = {"parts": list(parts), "t": t}
    conditions = []
    if t * (n - 1) > m:
        conditions.append("t(n-1)>|E|")
    if n - parts[0] < t:
        conditions.append("sum(n_i,i>=2)<t")
    degenerate = _degenerate(n, m, t, params)
    if degenerate is not None:
        return degenerate
    if conditions:
        return AntiRamseyValue(m, tuple(conditions), params)
    second = parts[1] if len(parts) > 1 else 0
    split = multipartite_edges((parts[0] - 2,) + parts[1:]) + t + kronecker(parts[0], second)
    spread = t * (n - 2)
    if split >= spread:
        return AntiRamseyValue(split, ("split-largest",), params)
    return AntiRamseyValue(spread, ("t(n-2)",), params)


def r_bipartite(p: int, q: int, t: int) -> AntiRamseyValue:
    """r(K_{p,q}, t) for p >= q >= 1."""
    if not p >= q >= 1 or t < 1:
        raise ValueError(f"need p >= q >= 1 and t >= 1, got p={p}, q={q}, t={t}")
    params = {"p": p, "q": q, "t": t}
    conditions = []
    if t * (p + q - 1) > p * q:
        conditions.append("t(p+q-1)>pq")
    if q < t:
        conditions.append("q<t")
    degenerate = _degenerate(p + q, p * q, t, params)
    if degenerate is not None:
        return degenerate
    if conditions:
        return AntiRamseyValue(p * q, tuple(conditions), params)
    split = (p - 2) * q + t + kronecker(p, q)
    spread = t * (p + q - 2)
    if split >= spread:
        return AntiRamseyValue(split, ("split-largest",), params)
    return AntiRamseyValue(spread, ("t(n-2)",), params)


def integer_partitions(n: int, largest: int | None = None) -> Iterable[tuple[int, ...]]:
    """Non-increasing tuples of positive integers summing to ``n``."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in integer_partitions(n - first, first):
            yield (first,) + rest


def all_shapes(max_n: int, min_n: int = 1) -> Iterable[MultipartiteShape]:
    for n in range(min_n, max_n + 1):
        for parts in integer_partitions(n):
            yield MultipartiteShape(parts)
