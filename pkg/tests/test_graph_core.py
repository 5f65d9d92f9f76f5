import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from oracles import brute_contains, brute_cycles
from ramsey_workbench.graph_core import (
    Embedding,
    Graph,
    Hypergraph,
    complete_bipartite,
    complete_graph,
    complete_join,
    complete_multipartite,
    connected_subsets,
    cycle_graph,
    cycles_up_to,
    disjoint_union,
    empty_graph,
    find_subgraph_copy,
    induced_subgraph,
    iter_bits,
    petersen_graph,
)


class TestGraphType:
    def test_rejects_loops_and_bad_endpoints(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, ((1, 0),))

    def test_parallel_edges_collapse(self):
        g = Graph.from_edges(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edges == ((0, 1),)

    def test_adjacency(self):
        g = cycle_graph(5)
        assert g.has_edge(0, 4) and g.has_edge(4, 0) and not g.has_edge(0, 2)
        assert g.neighbours(0) == [1, 4]


class TestHypergraphType:
    def test_invariants(self):
        with pytest.raises(ValueError):
            Hypergraph(4, 3, ((0, 1),))
        with pytest.raises(ValueError):
            Hypergraph(4, 3, ((0, 1, 4),))
        h = Hypergraph.from_edges(5, 3, [(2, 1, 0), (0, 1, 2), (4, 3, 2)])
        assert h.hyperedges == ((0, 1, 2), (2, 3, 4))
        assert h.incidence[2] == (0, 1)


def test_embedding_must_be_injective():
    with pytest.raises(ValueError):
        Embedding(2, (1, 1))


@pytest.mark.parametrize("r, m", [(0, 0), (3, 3), (6, 15)])
def test_complete_graph(r, m):
    assert complete_graph(r).n == r and complete_graph(r).num_edges == m


@pytest.mark.parametrize("r, m, edges", [(1, 5, 0), (3, 2, 12), (2, 3, 9)])
def test_complete_multipartite(r, m, edges):
    g = complete_multipartite(r, m)
    assert g.n == r * m and g.num_edges == edges
    for u, v in g.edges:
        assert u // m != v // m


def test_disjoint_union_examples():
    g = disjoint_union(complete_graph(3), complete_graph(2))
    assert (g.n, g.num_edges) == (5, 4)
    assert disjoint_union(petersen_graph(), empty_graph(0)) == petersen_graph()
    assert disjoint_union(empty_graph(2), empty_graph(3)) == empty_graph(5)


def test_complete_join_examples():
    assert complete_join(4, empty_graph(32)) == complete_bipartite(4, 32)
    assert complete_join(4, empty_graph(32)).num_edges == 128
    assert complete_join(0, cycle_graph(5)) == cycle_graph(5)
    g = complete_join(2, complete_graph(2))
    assert g.num_edges == 5 and not g.has_edge(0, 1)


@given(small_graphs(), small_graphs())
def test_disjoint_union_edge_count(g, h):
    assert disjoint_union(g, h).num_edges == g.num_edges + h.num_edges


@given(st.integers(0, 5), small_graphs())
def test_complete_join_restrictions(a, g):
    j = complete_join(a, g)
    assert induced_subgraph(j, range(a, a + g.n)) == g
    assert induced_subgraph(j, range(a)).num_edges == 0
    assert all(j.has_edge(x, a + y) for x in range(a) for y in range(g.n))


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(5), [4, 1, 2]) == complete_graph(3)
    assert induced_subgraph(cycle_graph(5), [3, 4]) == complete_graph(2)
    assert induced_subgraph(cycle_graph(5), []) == empty_graph(0)


class TestSubgraphCopy:
    def test_examples(self):
        pattern = disjoint_union(complete_graph(3), complete_graph(2))
        emb = find_subgraph_copy(complete_graph(6), pattern)
        assert emb is not None and emb.is_valid(pattern, complete_graph(6))
        assert find_subgraph_copy(cycle_graph(5), complete_graph(3)) is None

    def test_petersen_contains_c5(self):
        emb = find_subgraph_copy(petersen_graph(), cycle_graph(5))
        assert emb is not None and emb.is_valid(cycle_graph(5), petersen_graph())
        assert brute_contains(petersen_graph(), cycle_graph(5))

    def test_deterministic(self):
        p = petersen_graph()
        assert find_subgraph_copy(p, cycle_graph(5)) == find_subgraph_copy(p, cycle_graph(5))

    def test_isolated_pattern_vertices(self):
        pattern = disjoint_union(complete_graph(2), empty_graph(2))
        assert find_subgraph_copy(complete_graph(3), pattern) is None
        assert find_subgraph_copy(complete_graph(4), pattern) is not None

    @settings(max_examples=150, deadline=None)
    @given(small_graphs(max_n=6), small_graphs(max_n=4))
    def test_agrees_with_exhaustive_maps(self, host, pattern):
        emb = find_subgraph_copy(host, pattern)
        assert (emb is not None) == brute_contains(host, pattern)
        if emb is not None:
            assert emb.is_valid(pattern, host)


class TestCycles:
    def test_examples(self):
        assert len(cycles_up_to(complete_graph(4), 3)) == 4
        assert cycles_up_to(cycle_graph(5), 4) == []
        k23 = complete_bipartite(2, 3)
        assert len(cycles_up_to(k23, 4)) == 3
        assert len(brute_cycles(k23, 4)) == 3

    def test_rejects_tiny_cap(self):
        with pytest.raises(ValueError):
            cycles_up_to(complete_graph(3), 2)

    @settings(max_examples=80, deadline=None)
    @given(small_graphs(max_n=7), st.integers(3, 7))
    def test_matches_brute_force(self, g, cap):
        found = cycles_up_to(g, cap)
        as_sets = set()
        for cyc in found:
            k = len(cyc)
            es = frozenset(frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k))
            assert all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k))
            assert len(set(cyc)) == k
            as_sets.add(es)
        assert len(as_sets) == len(found)
        assert as_sets == brute_cycles(g, cap)


@settings(max_examples=80, deadline=None)
@given(small_graphs(max_n=7), st.integers(1, 5))
def test_connected_subsets_exactly_once(g, size):
    from itertools import combinations

    import networkx as nx

    got = list(connected_subsets(g, size))
    assert len(got) == len(set(got))
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges)
    expected = {
        sum(1 << v for v in s)
        for r in range(1, size + 1)
        for s in combinations(range(g.n), r)
        if nx.is_connected(nxg.subgraph(s))
    }
    assert set(got) == expected


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
