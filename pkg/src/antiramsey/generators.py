"""Seeded random instances for verification runs.

Graphs are Erdos-Renyi multigraphs: each of the ``mult`` copies of every
vertex pair is present independently with probability ``p``. Colorings pick a
uniform color in ``0..k-1`` per edge and then renumber the used colors densely.
All randomness comes from a ``random.Random`` the caller seeds.
"""

from __future__ import annotations

import random
from itertools import combinations

from .graph import ColoredMultigraph
from .rainbow import ForestFamily, is_forest, is_rainbow


def erdos_renyi(rng: random.Random, n: int, p: float, mult: int = 1, max_edges: int | None = None) -> ColoredMultigraph:
    pairs = [pair for pair in combinations(range(n), 2) for _ in range(mult) if rng.random() < p]
    if max_edges is not None and len(pairs) > max_edges:
        pairs = sorted(rng.sample(pairs, max_edges))
    return ColoredMultigraph.from_edges(n, pairs)


def uniform_coloring(rng: random.Random, G: ColoredMultigraph, k: int) -> ColoredMultigraph:
    raw = [rng.randrange(k) for _ in range(G.m)]
    remap: dict[int, int] = {}
    return G.with_colors([remap.setdefault(c, len(remap)) for c in raw])


def surjective_coloring(rng: random.Random, G: ColoredMultigraph, k: int) -> ColoredMultigraph:
    """Exactly ``k`` colors: a random permutation of ``0..k-1`` plus uniform filler."""
    if not 1 <= k <= G.m:
        raise ValueError(f"cannot use {k} colors on {G.m} edges")
    raw = list(range(k)) + [rng.randrange(k) for _ in range(G.m - k)]
    rng.shuffle(raw)
    remap: dict[int, int] = {}
    return G.with_colors([remap.setdefault(c, len(remap)) for c in raw])


def random_forest_family(rng: random.Random, G: ColoredMultigraph, t: int, attempts: int | None = None) -> ForestFamily:
    """Edge-disjoint rainbow forests grown by random edge insertions."""
    forests: list[list[int]] = [[] for _ in range(t)]
    used: set[int] = set()
    if attempts is None:
        attempts = rng.randrange(0, G.m + 1)
    for _ in range(attempts):
        e = rng.randrange(G.m) if G.m else None
        if e is None or e in used:
            continue
        f = forests[rng.randrange(t)]
        if is_forest(G, f + [e]) and is_rainbow(G, f + [e]):
            f.append(e)
            used.add(e)
    return ForestFamily(tuple(forests))


def simple_graphs(n: int):
    """Every labeled simple graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield ColoredMultigraph.from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])


def is_connected(G: ColoredMultigraph) -> bool:
    if G.n <= 1:
        return True
    adj: dict[int, set[int]] = {v: set() for v in range(G.n)}
    for e in G.edges:
        adj[e.u].add(e.v)
        adj[e.v].add(e.u)
    seen, stack = {0}, [0]
    while stack:
        for w in adj[stack.pop()] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == G.n


def connected_graphs(n: int):
    """Labeled connected simple graphs on ``n`` vertices."""
    return (G for G in simple_graphs(n) if is_connected(G))


def _profile(rng: random.Random, m: int, k: int, cap: int, top: int = 1) -> list[int]:
    """Random class sizes: k classes summing to m, each in [1, cap], the first >= top."""
    sizes = [top] + [1] * (k - 1)
    spare = m - sum(sizes)
    while spare:
        i = rng.randrange(k)
        if sizes[i] < cap:
            sizes[i] += 1
            spare -= 1
    return sizes


def seeding_instance(rng: random.Random, case: int, max_n: int = 5, tries: int = 1000):
    """A colored host for the repeated-color seeding procedure.

    The host has t edge-disjoint spanning trees and a coloring with more than
    both max_{|P|>=3} |E(P,G)| + t(|P|-2) and max_{|P|=2} |E(P,G)| colors.
    ``case == 1``: some color has multiplicity >= max(t, 2). ``case == 2``: every
    multiplicity is at most t - 1 and some color repeats (needs t >= 3).
    Returns ``(G, t)``.
    """
    from .general import packing_feasible, r_general
    from .partitions import maximize_over_partitions, noncrossing_count

    for _ in range(tries):
        n = rng.randint(3, max_n)
        t = rng.randint(1, 3) if case == 1 else rng.randint(3, 4)
        H = erdos_renyi(rng, n, rng.uniform(0.6, 1.0), mult=rng.randint(t, t + 1))
        if H.m < t * (n - 1) or not packing_feasible(H, t)[0]:
            continue
        r = r_general(H, t).value
        f2, _ = maximize_over_partitions(H, noncrossing_count, 2, 2)
        lo = max(r + 1, f2 + 1)
        if case == 1:
            hi = H.m - max(t, 2) + 1
        else:
            lo = max(lo, -(-H.m // (t - 1)))
            hi = H.m - 1
        if lo > hi:
            continue
        k = rng.randint(lo, hi)
        if case == 1:
            sizes = _profile(rng, H.m, k, H.m, top=rng.randint(max(t, 2), H.m - k + 1))
        else:
            sizes = _profile(rng, H.m, k, t - 1)
        raw = [c for c, size in enumerate(sizes) for _ in range(size)]
        rng.shuffle(raw)
        remap: dict[int, int] = {}
        return H.with_colors([remap.setdefault(c, len(remap)) for c in raw]), t
    raise RuntimeError(f"no case-{case} instance found in {tries} tries")
