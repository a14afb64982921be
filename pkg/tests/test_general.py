import pytest
from hypothesis import assume, given, settings, strategies as st

from antiramsey.formulas import MultipartiteShape, all_shapes, r_complete, r_multipartite
from antiramsey.general import Branch, NoAvoidingColoring, avoiding_coloring_exists, packing_feasible, r_general
from antiramsey.graph import ColoredMultigraph, VertexPartition, classify_edges, complete_graph, complete_multipartite
from antiramsey.partitions import PartitionCapExceeded, enumerate_partitions
from antiramsey.rainbow import is_spanning_tree
from conftest import multigraphs, set_partitions

K4 = complete_graph(4)
TWO_K2 = ColoredMultigraph.from_edges(4, [(0, 1), (2, 3)])


def test_packing_k4_t1():
    assert packing_feasible(K4, 1) == (True, None)


def test_packing_disconnected():
    ok, witness = packing_feasible(TWO_K2, 1)
    assert not ok
    assert witness == VertexPartition.parse("0,1|2,3")


def test_packing_k4_t2():
    pairs = K4.pairs()
    brute = all(len(pairs) - sum(1 for u, v in pairs if any(u in b and v in b for b in P)) >= 2 * (len(P) - 1)
                for P in set_partitions([0, 1, 2, 3]))
    assert brute
    assert packing_feasible(K4, 2)[0]
    trees = [[pairs.index(e) for e in [(0, 1), (1, 2), (2, 3)]],
             [pairs.index(e) for e in [(0, 2), (1, 3), (0, 3)]]]
    assert all(is_spanning_tree(K4, t) for t in trees) and not set(trees[0]) & set(trees[1])


def test_packing_k4_t3_fails_on_counting():
    ok, witness = packing_feasible(K4, 3)
    assert not ok and witness == VertexPartition.singletons(4)


def test_r_general_k4():
    res = r_general(K4, 1)
    assert res.value == 2 and res.branch is Branch.PARTITION_MAX
    assert res.witness == VertexPartition.parse("0,1|2|3")


@pytest.mark.parametrize("t", [1, 2, 5])
def test_r_general_disconnected(t):
    res = r_general(TWO_K2, t)
    assert (res.value, res.branch) == (2, Branch.PACKING_INFEASIBLE)


def test_r_general_octahedron():
    assert r_general(complete_multipartite((2, 2, 2)), 1).value == 6


def test_degenerate_hosts():
    with pytest.raises(NoAvoidingColoring):
        r_general(ColoredMultigraph(1), 1)
    with pytest.raises(NoAvoidingColoring):
        r_general(ColoredMultigraph.from_edges(2, [(0, 1)] * 3), 3)
    res = r_general(ColoredMultigraph.from_edges(2, [(0, 1)] * 2), 3)
    assert (res.value, res.branch) == (2, Branch.PACKING_INFEASIBLE)


def test_cap():
    with pytest.raises(PartitionCapExceeded):
        r_general(complete_graph(15), 1)


def test_avoiding_coloring_exists():
    assert avoiding_coloring_exists(K4, 1, 2)
    assert not avoiding_coloring_exists(K4, 1, 3)
    assert avoiding_coloring_exists(TWO_K2, 1, 2)
    assert not avoiding_coloring_exists(ColoredMultigraph.from_edges(2, [(0, 1)]), 1, 1)
    with pytest.raises(ValueError):
        avoiding_coloring_exists(K4, 1, 7)


@pytest.mark.parametrize("n", range(3, 10))
def test_matches_complete_formula(n):
    for t in range(1, 6):
        assert r_general(complete_graph(n), t).value == r_complete(n, t).value


@pytest.mark.parametrize("shape", list(all_shapes(7, min_n=3)), ids=str)
def test_matches_multipartite_formula(shape):
    G = complete_multipartite(shape.parts)
    for t in range(1, 5):
        assert r_general(G, t).value == r_multipartite(shape, t).value


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=3, max_n=6, max_m=12), st.integers(1, 3), st.data())
def test_adding_an_edge_moves_value_by_at_most_one(G, t, data):
    pairs = [(u, v) for u in range(G.n) for v in range(u + 1, G.n)]
    u, v = data.draw(st.sampled_from(pairs))
    before, after = r_general(G, t), r_general(G.add_edge(u, v), t)
    assume(before.branch is after.branch is Branch.PARTITION_MAX)
    assert after.value - before.value in (0, 1)


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=3, max_n=6, max_m=12), st.integers(1, 3))
def test_value_dominates_every_partition(G, t):
    res = r_general(G, t)
    assume(res.branch is Branch.PARTITION_MAX)
    for P in enumerate_partitions(G.n, 3):
        assert res.value >= len(classify_edges(G, P)[1]) + t * (P.block_count - 2)


@settings(max_examples=60, deadline=None)
@given(multigraphs(min_n=1, max_n=6, max_m=12), st.integers(1, 3))
def test_result_invariants(G, t):
    try:
        res = r_general(G, t)
    except NoAvoidingColoring:
        assert G.n <= 2
        return
    crossing = len(classify_edges(G, res.witness)[0])
    k = res.witness.block_count
    if res.branch is Branch.PACKING_INFEASIBLE:
        assert crossing < t * (k - 1) and res.value == G.m
    else:
        assert k >= 3 and res.value == G.m - crossing + t * (k - 2)


def test_multipartite_shape_helper_consistency():
    assert r_general(complete_multipartite((4, 4)), 1).value == r_multipartite(MultipartiteShape((4, 4)), 1).value == 10
