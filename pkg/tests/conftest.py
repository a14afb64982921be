import random
from itertools import combinations

import pytest
from hypothesis import strategies as st

from antiramsey.graph import ColoredMultigraph, VertexPartition


def set_partitions(items):
    """Plain recursive set partitions; independent of the package's RGS code."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [[first] + p[i]] + p[i + 1:]
        yield [[first]] + p


def stirling2(n, k):
    table = [[0] * (k + 1) for _ in range(n + 1)]
    table[0][0] = 1
    for i in range(1, n + 1):
        for j in range(1, k + 1):
            table[i][j] = j * table[i - 1][j] + table[i - 1][j - 1]
    return table[n][k]


def noncrossing(pairs, blocks):
    owner = {v: i for i, b in enumerate(blocks) for v in b}
    return sum(owner[u] == owner[v] for u, v in pairs)


@st.composite
def multigraphs(draw, min_n=1, max_n=6, max_m=10, colored=False, max_colors=None):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        edges = []
    else:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=max_m))
    if not colored:
        return ColoredMultigraph.from_edges(n, edges)
    k = max(1, min(max_colors or len(edges), len(edges)))
    raw = draw(st.lists(st.integers(0, k - 1), min_size=len(edges), max_size=len(edges)))
    remap = {}
    return ColoredMultigraph.from_edges(n, edges, [remap.setdefault(c, len(remap)) for c in raw])


@st.composite
def partitions_of(draw, n):
    labels = draw(st.lists(st.integers(0, max(n - 1, 0)), min_size=n, max_size=n))
    return VertexPartition.from_labels(labels)


@st.composite
def graph_and_partition(draw, colored=False, **kw):
    G = draw(multigraphs(colored=colored, **kw))
    return G, draw(partitions_of(G.n))


@pytest.fixture
def rng():
    return random.Random(20240601)


_ACCEPTANCE_KEY = pytest.StashKey[dict]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    lines = request.config.stash.setdefault(_ACCEPTANCE_KEY, {})

    def record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}" + (f" ({detail})" if detail else "")
        lines[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_ACCEPTANCE_KEY, {})
    if lines:
        terminalreporter.section("acceptance")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
