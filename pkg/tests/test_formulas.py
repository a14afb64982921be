from math import comb

import pytest
from hypothesis import given, strategies as st

from antiramsey.formulas import (
    NO_AVOIDING,
    MultipartiteShape,
    all_shapes,
    check_concavity,
    f_multipartite,
    f_multipartite_witness,
    f_profile,
    integer_partitions,
    multipartite_edges,
    r_bipartite,
    r_complete,
    r_multipartite,
)
from antiramsey.graph import classify_edges, complete_multipartite
from conftest import noncrossing, set_partitions

shapes_upto_12 = st.integers(1, 12).flatmap(lambda n: st.sampled_from(list(integer_partitions(n))))


def test_shape_invariants():
    assert MultipartiteShape((4, 4)).edge_count == 16
    assert MultipartiteShape.complete(6).edge_count == 15
    assert MultipartiteShape((5,)).edge_count == 0
    assert MultipartiteShape.of([1, 3, 2]).parts == (3, 2, 1)
    with pytest.raises(ValueError):
        MultipartiteShape((2, 3))
    with pytest.raises(ValueError):
        MultipartiteShape((2, 0))


@given(shapes_upto_12)
def test_edge_count_matches_explicit(parts):
    assert MultipartiteShape(parts).edge_count == complete_multipartite(parts).m


def test_f_complete_three_blocks():
    assert f_multipartite(MultipartiteShape.complete(6), 3) == comb(4, 2) == 6


def test_f_bipartite_two_blocks():
    assert f_multipartite(MultipartiteShape((4, 4)), 2) == 12


@given(shapes_upto_12)
def test_f_all_singletons(parts):
    shape = MultipartiteShape(parts)
    assert f_multipartite(shape, shape.n) == 0
    assert f_multipartite(shape, 1) == shape.edge_count


def test_f_222_three_blocks():
    # brute force over all 3-block partitions of the octahedron
    pairs = complete_multipartite((2, 2, 2)).pairs()
    brute = max(noncrossing(pairs, b) for b in set_partitions(list(range(6))) if len(b) == 3)
    assert brute == 5
    assert f_multipartite(MultipartiteShape((2, 2, 2)), 3) == 5


def test_f_out_of_range():
    with pytest.raises(ValueError):
        f_multipartite(MultipartiteShape((2, 2)), 5)
    with pytest.raises(ValueError):
        f_multipartite(MultipartiteShape((2, 2)), 0)


@pytest.mark.parametrize("parts", [(2, 2, 2), (4, 4), (3, 2, 1), (1,) * 5, (5, 1, 1)])
def test_witness_attains_f(parts):
    shape = MultipartiteShape(parts)
    G = complete_multipartite(parts)
    for s in range(1, shape.n + 1):
        P = f_multipartite_witness(shape, s)
        assert P.block_count == s
        assert len(classify_edges(G, P)[1]) == f_multipartite(shape, s)


@given(shapes_upto_12)
def test_profile_matches_pointwise(parts):
    shape = MultipartiteShape(parts)
    assert f_profile(shape) == [f_multipartite(shape, s) for s in range(1, shape.n + 1)]


@pytest.mark.parametrize("parts", [(1,) * 6, (4, 4), (3, 2, 1)])
def test_concavity_examples(parts):
    assert check_concavity(MultipartiteShape(parts))


def test_second_difference_is_kronecker_of_residual_top_parts():
    # f(s) - 2f(s+1) + f(s+2) is 0 or 1 for every shape
    for shape in all_shapes(12, min_n=4):
        f = f_profile(shape)
        diffs = {f[i] - 2 * f[i + 1] + f[i + 2] for i in range(1, shape.n - 2)}
        assert diffs <= {0, 1}


@pytest.mark.parametrize("n,t,value,branch", [
    (6, 1, 7, "n>=2t+2"),
    (4, 2, 4, "n=2t"),
    (5, 2, 6, "n=2t+1"),
    (3, 2, 3, "n<2t"),
    (3, 1, 1, "n=2t+1"),
])
def test_r_complete(n, t, value, branch):
    res = r_complete(n, t)
    assert (res.value, res.branch) == (value, (branch,))


def test_r_complete_degenerate_hosts():
    assert r_complete(1, 3).branch == (NO_AVOIDING,)
    assert r_complete(2, 1).value is None
    assert r_complete(2, 2).value == 1


def test_r_multipartite_examples():
    assert r_multipartite(MultipartiteShape((5, 4)), 1).value == 3 * 4 + 1 + 0 == 13
    res = r_multipartite(MultipartiteShape((3, 1)), 2)
    assert res.value == 3 and "sum(n_i,i>=2)<t" in res.branch
    assert r_multipartite(MultipartiteShape((2, 2, 2)), 1).value == 6


def test_r_multipartite_reports_every_condition():
    # K_{2,2} with t = 3: t(n-1) = 9 > 4 and n - n_1 = 2 < 3
    res = r_multipartite(MultipartiteShape((2, 2)), 3)
    assert res.value == 4
    assert res.branch == ("t(n-1)>|E|", "sum(n_i,i>=2)<t")


def test_r_bipartite_examples():
    assert r_bipartite(4, 4, 1).value == 10
    assert r_bipartite(5, 5, 2).value == 15 + 2 + 1 == 18
    res = r_bipartite(2, 2, 2)
    assert res.value == 4 and "t(p+q-1)>pq" in res.branch
    with pytest.raises(ValueError):
        r_bipartite(2, 3, 1)


def test_jahanbekam_west_regime():
    # r(K_{p,q},1) = (p-2)q + 1 + [p == q] for p >= q >= 4
    for p in range(4, 12):
        for q in range(4, p + 1):
            assert r_bipartite(p, q, 1).value == (p - 2) * q + 1 + (p == q)


@pytest.mark.parametrize("n", range(1, 13))
def test_complete_equals_multipartite(n):
    for t in range(1, 7):
        assert r_complete(n, t).value == r_multipartite(MultipartiteShape.complete(n), t).value


def test_bipartite_equals_multipartite():
    for p in range(1, 11):
        for q in range(1, p + 1):
            for t in range(1, 7):
                assert r_bipartite(p, q, t).value == r_multipartite(MultipartiteShape((p, q)), t).value


def test_large_bipartite_margin():
    for t in range(1, 7):
        for q in range(2 * t + 1, 2 * t + 8):
            for p in range(q, q + 6):
                d = int(p == q)
                assert r_bipartite(p, q, t).value == (p - 2) * q + t + d
                assert (p - 2 - t) * (q - t) - t * t + t + d >= t
                assert p * q - t * (p + q - 1) == (p - t) * (q - t) - t * t + t > 0


def test_formal_negative_part():
    # K_n: |E(K_{-1,1,...,1})| + 1 = C(n-2, 2)
    for n in range(3, 15):
        assert multipartite_edges((-1,) + (1,) * (n - 1)) + 1 == comb(n - 2, 2)
