import random

import pytest

from csfkit.graphs import (
    Graph,
    UnsupportedSizeError,
    bipartition_type,
    coloring_monomial_expansion,
    complete_graph,
    component_size_partition,
    cycle_graph,
    independence_number,
    path_graph,
    spider,
    star_graph,
    stable_partition_types,
)
from csfkit.partitions import Partition, partitions_of
from conftest import small_corpus
from oracles import proper_colorings_by_content, random_tree_edges, stable_types_brute


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))
    with pytest.raises(ValueError):
        Graph(2, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(2, ((0, 1), (1, 0)))


def test_json_round_trip():
    g = spider((2, 1))
    assert Graph.from_json(g.to_json()) == g


def test_spider_nine():
    g = spider((9,))
    adj = g.neighbors()
    assert g.vertex_count == 20 and len(g.edges) == 19
    assert len(adj[0]) == 10
    assert sorted(adj[1]) == [0] + list(range(11, 20))


def test_spider_two_one():
    g = spider((2, 1))
    adj = g.neighbors()
    assert g.vertex_count == 8
    assert len(adj[0]) == 4
    assert sorted(adj[1]) == [0, 5, 6]
    assert sorted(adj[2]) == [0, 7]
    assert adj[3] == [0] and adj[4] == [0]


def test_spider_all_ones():
    g = spider((1,) * 9)
    adj = g.neighbors()
    assert g.vertex_count == 20
    assert all(len(adj[i]) == 2 for i in range(1, 10))
    assert adj[10] == [0]


def test_spider_empty_is_k2():
    assert spider(()) == Graph(2, ((0, 1),))


@pytest.mark.parametrize("k", range(0, 10))
def test_spider_is_tree(k):
    for nu in partitions_of(k):
        n = k + 1
        g = spider(nu)
        assert g.is_tree()
        assert g.vertex_count == 2 * n and g.degree(0) == n
        leaves = sum(1 for v in range(g.vertex_count) if g.degree(v) == 1)
        # for K_2 the hub is a leaf as well
        assert leaves == n - len(nu) + nu.n + (n == 1)
        assert bipartition_type(g) == (n, n)


def test_component_size_examples():
    g = path_graph(3)
    assert component_size_partition(g, []) == (1, 1, 1)
    assert component_size_partition(g, [0, 1]) == (3,)
    assert component_size_partition(g, [0]) == (2, 1)


def test_forest_component_count():
    rng = random.Random(5)
    for _ in range(20):
        m = rng.randint(2, 10)
        g = Graph(m, tuple(random_tree_edges(m, rng)))
        kept = [i for i in range(len(g.edges)) if rng.random() < 0.5]
        assert len(component_size_partition(g, kept)) == m - len(kept)


def test_bipartition_examples():
    assert bipartition_type(path_graph(4)) == (2, 2)
    assert bipartition_type(star_graph(3)) == (3, 1)
    assert bipartition_type(cycle_graph(5)) is None
    with pytest.raises(ValueError):
        bipartition_type(Graph(3, ((0, 1),)))


def test_coloring_examples():
    assert coloring_monomial_expansion(Graph(2, ((0, 1),)), 2).coeffs == {(1, 1): 2}
    assert coloring_monomial_expansion(path_graph(3), 3).coeffs == {(2, 1): 1, (1, 1, 1): 6}
    assert coloring_monomial_expansion(Graph(1), 1).coeffs == {(1,): 1}
    assert not coloring_monomial_expansion(complete_graph(3), 2)


@pytest.mark.parametrize("name,g", [c for c in small_corpus(6)])
def test_coloring_matches_product_oracle(name, g):
    nv = g.vertex_count
    k = min(nv, 4)
    counts = proper_colorings_by_content(nv, g.edges, k)
    expected = {}
    for mu in partitions_of(nv):
        if len(mu) <= k:
            c = counts.get(tuple(mu) + (0,) * (k - len(mu)), 0)
            if c:
                expected[mu] = c
    assert coloring_monomial_expansion(g, k).coeffs == expected


def test_stable_types_examples():
    assert stable_partition_types(Graph(2, ((0, 1),))) == {(1, 1)}
    assert stable_partition_types(complete_graph(3)) == {(1, 1, 1)}
    assert stable_partition_types(star_graph(3)) == {(3, 1), (2, 1, 1), (1, 1, 1, 1)}


@pytest.mark.parametrize("name,g", small_corpus(7))
def test_stable_types_match_set_partition_oracle(name, g):
    types = stable_partition_types(g)
    assert types == stable_types_brute(g.vertex_count, g.edges)
    if g.vertex_count:
        alpha = independence_number(g)
        assert all(lam[0] <= alpha for lam in types)
        assert any(lam[0] == alpha for lam in types)


def test_bipartition_is_stable_type():
    rng = random.Random(11)
    graphs = [spider(nu) for k in range(6) for nu in partitions_of(k)]
    graphs += [Graph(m, tuple(random_tree_edges(m, rng))) for m in (8, 10, 12, 12)]
    graphs += [cycle_graph(6), cycle_graph(12)]
    for g in graphs:
        assert bipartition_type(g) in stable_partition_types(g)


def test_stable_types_size_limit():
    with pytest.raises(UnsupportedSizeError):
        stable_partition_types(path_graph(13))


def test_partition_type_is_partition():
    for lam in stable_partition_types(spider((3, 1))):
        assert isinstance(lam, Partition) and lam.n == 10
