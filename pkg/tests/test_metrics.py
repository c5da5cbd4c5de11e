import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import (
    brute_average_clustering,
    complete,
    cycle,
    oracle_pearson,
    oracle_undirected_assortativity,
    random_digraph,
    random_graph,
    star,
)
from smallworld import (
    DirectedGraph,
    UndefinedAssortativityError,
    UndefinedStatisticError,
    UndirectedGraph,
    UsageError,
    average_clustering,
    degree_assortativity,
    degree_histogram,
    directed_assortativity,
    local_clustering,
    summary_stats,
)
from smallworld.metrics import clustering_values

TRIANGLE = UndirectedGraph.from_pairs([(0, 1), (1, 2), (2, 0)])
K4_MINUS_EDGE = UndirectedGraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


def test_summary_triangle():
    s = summary_stats(TRIANGLE)
    assert s.edges_per_node == 1.0
    assert s.mean_degree == 2.0
    assert s.median_degree == 2
    assert s.average_clustering == 1.0
    assert s.assortativity is None


def test_summary_star5():
    s = summary_stats(star(5))
    assert s.mean_degree == pytest.approx(10 / 6)
    assert s.median_degree == 1
    assert s.edges_per_node == 5 / 6


def test_summary_lower_median():
    # degrees 1,1,2,2 -> lower median 1
    s = summary_stats(UndirectedGraph.from_pairs([(0, 1), (1, 2), (2, 3)]))
    assert s.median_degree == 1


def test_summary_empty_graph():
    with pytest.raises(UndefinedStatisticError):
        summary_stats(UndirectedGraph.from_pairs([], 0))


def test_summary_directed():
    g = DirectedGraph.from_pairs([(0, 2), (1, 2), (2, 3), (3, 0)])
    s = summary_stats(g)
    assert s.edges_per_node == s.mean_degree == 1.0
    assert s.assortativity is None
    assert s.assortativity_in == pytest.approx(directed_assortativity(g, "in"))
    assert s.average_clustering == average_clustering(g._undirected)


def test_local_clustering_examples():
    assert [local_clustering(TRIANGLE, v) for v in range(3)] == [1.0, 1.0, 1.0]
    assert local_clustering(star(4), 0) == 0.0
    assert local_clustering(star(4), 1) == 0.0
    # K4 minus (2,3): node 0 sees pairs (1,2),(1,3),(2,3); two of three are edges
    assert local_clustering(K4_MINUS_EDGE, 0) == pytest.approx(2 / 3)
    assert local_clustering(K4_MINUS_EDGE, 2) == 1.0


def test_local_clustering_degree3_vertex_with_one_linked_pair():
    # vertex 0 has neighbours 1,2,3 and only (1,2) adjacent
    g = UndirectedGraph.from_pairs([(0, 1), (0, 2), (0, 3), (1, 2)])
    assert local_clustering(g, 0) == pytest.approx(1 / 3)


def test_local_clustering_range_error():
    with pytest.raises(UsageError):
        local_clustering(TRIANGLE, 3)


def test_average_clustering_small():
    assert average_clustering(TRIANGLE) == 1.0
    assert average_clustering(UndirectedGraph.from_pairs([(0, 1), (1, 2)])) == 0.0
    with pytest.raises(UndefinedStatisticError):
        average_clustering(UndirectedGraph.from_pairs([], 0))


@pytest.mark.parametrize("seed", range(20))
def test_clustering_vectorised_matches_pointwise(seed):
    g = random_graph(30, 0.2, seed)
    fast = clustering_values(g)
    slow = [local_clustering(g, v) for v in range(g.node_count)]
    assert np.allclose(fast, slow, rtol=0, atol=1e-15)
    assert average_clustering(g) == pytest.approx(brute_average_clustering(g), abs=1e-12)


def test_star_assortativity():
    for leaves in (3, 4, 10, 100):
        assert degree_assortativity(star(leaves)) == pytest.approx(-1.0, abs=1e-9)
    # direct-formula oracle on the endpoint pairs {(1, n), (n, 1)} x n
    n = 7
    pairs = [(1, n), (n, 1)] * n
    assert oracle_pearson(pairs) == pytest.approx(-1.0, abs=1e-12)


def test_regular_graph_assortativity_undefined():
    with pytest.raises(UndefinedAssortativityError):
        degree_assortativity(cycle(5))
    with pytest.raises(UndefinedAssortativityError):
        degree_assortativity(complete(6))
    with pytest.raises(UndefinedAssortativityError):
        degree_assortativity(UndirectedGraph.from_pairs([], 3))


@pytest.mark.parametrize("seed", range(15))
def test_assortativity_matches_oracle(seed):
    g = random_graph(40, 0.1, seed)
    assert degree_assortativity(g) == pytest.approx(oracle_undirected_assortativity(g), abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.permutations(range(25)))
def test_assortativity_relabel_invariant(seed, perm):
    g = random_graph(25, 0.2, seed)
    relabelled = UndirectedGraph.from_pairs([(perm[u], perm[v]) for u, v in g.edges().tolist()], 25)
    try:
        r = degree_assortativity(g)
    except UndefinedAssortativityError:
        with pytest.raises(UndefinedAssortativityError):
            degree_assortativity(relabelled)
        return
    assert degree_assortativity(relabelled) == pytest.approx(r, abs=1e-12)


def test_undirected_endpoint_means_are_equal():
    g = random_graph(50, 0.1, 3)
    deg = g.degrees
    x = np.repeat(deg, deg)
    y = deg[g.indices]
    assert x.mean() == pytest.approx(y.mean(), abs=0)


def test_directed_assortativity_hand_example():
    g = DirectedGraph.from_pairs([(0, 2), (1, 2), (2, 3)])
    # indegrees 0,0,2,1 -> pairs (0,2),(0,2),(2,1); cov = -12/9, var_x = 24/9, var_y = 6/9
    expected = (-12 / 9) / math.sqrt(24 / 9 * 6 / 9)
    assert directed_assortativity(g, "in") == pytest.approx(expected, abs=1e-12)
    assert directed_assortativity(g, "in") == pytest.approx(oracle_pearson([(0, 2), (0, 2), (2, 1)]), abs=1e-12)
    # outdegrees 1,1,1,0 -> source coordinate constant
    with pytest.raises(UndefinedAssortativityError):
        directed_assortativity(g, "out")


@pytest.mark.parametrize("seed", range(10))
def test_directed_assortativity_matches_oracle(seed):
    g = random_digraph(30, 0.08, seed)
    indeg, outdeg = g.in_degrees, g.out_degrees
    edges = g.edges().tolist()
    for mode, d in (("in", indeg), ("out", outdeg)):
        expected = oracle_pearson([(d[u], d[v]) for u, v in edges])
        assert directed_assortativity(g, mode) == pytest.approx(expected, abs=1e-12)


def test_directed_assortativity_needs_digraph():
    with pytest.raises(UsageError):
        directed_assortativity(TRIANGLE, "in")
    with pytest.raises(UsageError):
        degree_assortativity(DirectedGraph.from_pairs([(0, 1)]))


def test_degree_histograms():
    assert degree_histogram(star(4)).bins == {1: 4, 4: 1}
    assert degree_histogram(TRIANGLE, "degree").bins == {2: 3}
    d = DirectedGraph.from_pairs([(0, 1), (0, 2)])
    assert degree_histogram(d, "out").bins == {2: 1, 0: 2}
    assert degree_histogram(d, "in").bins == {0: 1, 1: 2}
    assert degree_histogram(d, "out").rows() == [(0, 2), (2, 1)]


def test_degree_histogram_mode_mismatch():
    with pytest.raises(UsageError):
        degree_histogram(TRIANGLE, "in")
    with pytest.raises(UsageError):
        degree_histogram(DirectedGraph.from_pairs([(0, 1)]), "degree")
    with pytest.raises(UsageError):
        degree_histogram(TRIANGLE, "sideways")


@pytest.mark.parametrize("seed", range(5))
def test_histogram_totals(seed):
    g = random_digraph(40, 0.05, seed)
    for mode in ("in", "out"):
        assert degree_histogram(g, mode).total == g.node_count
    u = random_graph(40, 0.05, seed)
    assert degree_histogram(u).total == u.node_count
