import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from oracles import brute_arrows, brute_mono, brute_p_profile, chi_table
from ramsey_workbench.arrowing import (
    BudgetExceeded,
    EdgeColouring,
    PProfile,
    all_colourings,
    arrows,
    catalogue_graphs,
    colour_class,
    find_monochromatic_copy,
    find_separator,
    iter_separators,
    random_colouring,
    verify_p_profile,
)
from ramsey_workbench.formats import FormatError
from ramsey_workbench.graph_core import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    find_subgraph_copy,
    path_graph,
    spanning_subgraph,
)

K3 = complete_graph(3)


def alternating_c4() -> EdgeColouring:
    c4 = cycle_graph(4)
    # edges of C_4 sorted: (0,1) (0,3) (1,2) (2,3); opposite edges share a colour
    return EdgeColouring.from_mapping(c4, {(0, 1): 1, (2, 3): 1, (1, 2): 2, (0, 3): 2}, 2)


class TestEdgeColouring:
    def test_must_cover_edges(self):
        with pytest.raises(ValueError):
            EdgeColouring(K3, (1, 2), 2)
        with pytest.raises(ValueError):
            EdgeColouring(K3, (1, 2, 3), 2)

    def test_json_roundtrip(self):
        c = alternating_c4()
        d = c.to_dict()
        assert d == {"q": 2, "colours": {"0-1": 1, "0-3": 2, "1-2": 2, "2-3": 1}}
        assert EdgeColouring.from_dict(c.graph, d) == c

    def test_json_rejects_wrong_keys(self):
        with pytest.raises(FormatError):
            EdgeColouring.from_dict(K3, {"q": 2, "colours": {"0-1": 1}})

    def test_colour_class_examples(self):
        red = EdgeColouring.constant(complete_graph(4), 2, 1)
        assert colour_class(red, 1) == complete_graph(4)
        assert colour_class(red, 2) == empty_graph(4)
        c = alternating_c4()
        assert colour_class(c, 1).edges == ((0, 1), (2, 3))
        assert colour_class(c, 2).edges == ((0, 3), (1, 2))


class TestMonochromaticCopy:
    def test_all_red_k6(self):
        colour, emb = find_monochromatic_copy(EdgeColouring.constant(complete_graph(6), 2), K3)
        assert colour == 1 and emb.is_valid(K3, complete_graph(6))

    def test_edgeless_pattern(self):
        colour, emb = find_monochromatic_copy(EdgeColouring.constant(K3, 2, 2), empty_graph(1))
        assert colour == 1 and len(emb.image) == 1

    def test_ramsey_three_three(self):
        rng = np.random.default_rng(33)
        for n in (6, 7):
            for _ in range(5000):
                assert find_monochromatic_copy(random_colouring(complete_graph(n), 2, rng), K3) is not None


class TestArrows:
    def test_k6_arrows_triangle(self):
        assert arrows(complete_graph(6), K3).arrows

    def test_k6_does_not_arrow_triangle_plus_edge(self):
        pattern = disjoint_union(K3, complete_graph(2))
        r = arrows(complete_graph(6), pattern)
        assert not r.arrows
        assert find_monochromatic_copy(r.certificate, pattern) is None

    def test_k5_pentagon_colouring(self):
        r = arrows(complete_graph(5), K3)
        assert not r.arrows and find_monochromatic_copy(r.certificate, K3) is None
        # the only triangle-free 2-colourings of K_5 are two 5-cycles
        assert {colour_class(r.certificate, i).num_edges for i in (1, 2)} == {5}

    def test_edgeless_pattern_rule(self):
        assert arrows(complete_graph(3), empty_graph(3)).arrows
        assert not arrows(complete_graph(2), empty_graph(3)).arrows
        assert arrows(empty_graph(4), empty_graph(2)).arrows

    def test_isolated_vertices_in_pattern(self):
        pattern = disjoint_union(complete_graph(2), empty_graph(3))
        assert not arrows(complete_graph(4), pattern).arrows
        assert arrows(complete_graph(5), pattern).arrows

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            arrows(complete_graph(10), complete_graph(4), 2, budget_nodes=50)
        assert exc.value.nodes > 50

    def test_three_colours(self):
        # R(3,3,3) = 17; K_5 has triangle-free 3-colourings, and K_3 obviously does
        assert not arrows(complete_graph(5), K3, 3).arrows
        assert arrows(complete_graph(2), complete_graph(2), 3).arrows

    @settings(max_examples=120, deadline=None)
    @given(small_graphs(min_n=1, max_n=6).filter(lambda g: g.num_edges <= 12), small_graphs(min_n=1, max_n=4))
    def test_agrees_with_exhaustive_enumeration(self, f, h):
        r = arrows(f, h, 2)
        assert r.arrows == brute_arrows(f, h, 2)
        if not r.arrows:
            assert not brute_mono(r.certificate, h)

    @settings(max_examples=60, deadline=None)
    @given(small_graphs(min_n=3, max_n=6), small_graphs(min_n=1, max_n=3), st.integers(0, 2**15 - 1))
    def test_monotone_under_supergraphs(self, f, h, extra):
        pairs = [(u, v) for u in range(f.n) for v in range(u + 1, f.n)]
        added = [p for i, p in enumerate(pairs) if extra >> (i % 15) & 1]
        bigger = Graph.from_edges(f.n, list(f.edges) + added)
        if arrows(f, h, 2).arrows:
            assert arrows(bigger, h, 2).arrows
        sub = spanning_subgraph(f, f.edges[: f.num_edges // 2])
        if arrows(sub, h, 2).arrows:
            assert arrows(f, h, 2).arrows


class TestPProfile:
    def test_all_red_bipartite(self):
        c = EdgeColouring.constant(complete_bipartite(2, 3), 2)
        assert verify_p_profile(c, PProfile(5, (2, 1))) == (True, None)

    def test_all_red_triangle(self):
        c = EdgeColouring.constant(K3, 2)
        assert verify_p_profile(c, PProfile(3, (2, 1))) == (False, (1, (0, 1, 2)))

    def test_alternating_c4(self):
        ok, witness = verify_p_profile(alternating_c4(), PProfile(4, (1, 1)))
        assert not ok and witness == (1, (0, 1))
        assert verify_p_profile(alternating_c4(), PProfile(4, (2, 2)))[0]

    def test_small_cap_hides_long_odd_cycle(self):
        c = EdgeColouring.constant(cycle_graph(5), 2)
        assert verify_p_profile(c, PProfile(4, (2, 1)))[0]
        assert verify_p_profile(c, PProfile(5, (2, 1))) == (False, (1, (0, 1, 2, 3, 4)))

    def test_profile_validation(self):
        with pytest.raises(ValueError):
            PProfile(1, (1, 1))
        with pytest.raises(ValueError):
            PProfile(3, (0, 2))
        with pytest.raises(ValueError):
            verify_p_profile(alternating_c4(), PProfile(3, (1, 1, 1)))

    @settings(max_examples=200, deadline=None)
    @given(
        small_graphs(min_n=1, max_n=8),
        st.integers(2, 6),
        st.tuples(st.integers(1, 3), st.integers(1, 3)),
        st.integers(0, 2**32 - 1),
    )
    def test_agrees_with_all_subsets(self, g, n_cap, bounds, seed):
        c = random_colouring(g, 2, np.random.default_rng(seed))
        ok, witness = verify_p_profile(c, PProfile(n_cap, bounds))
        assert ok == brute_p_profile(c, n_cap, bounds)
        if not ok:
            colour, subset = witness
            assert len(subset) <= n_cap
            cls = colour_class(c, colour)
            mask = sum(1 << v for v in subset)
            assert chi_table(cls)[mask] > bounds[colour - 1]

    def test_ten_vertex_oracle(self):
        rng = np.random.default_rng(10)
        for _ in range(25):
            pairs = [(u, v) for u in range(10) for v in range(u + 1, 10)]
            g = Graph.from_edges(10, [p for p in pairs if rng.random() < 0.4])
            c = random_colouring(g, 2, rng)
            for n_cap, bounds in ((4, (2, 2)), (6, (2, 3)), (10, (3, 3))):
                assert verify_p_profile(c, PProfile(n_cap, bounds))[0] == brute_p_profile(c, n_cap, bounds)


class TestSeparators:
    def test_catalogue_counts(self):
        # number of graphs on 1..7 vertices up to isomorphism
        assert [sum(1 for g in catalogue_graphs(7) if g.n == n) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
        with pytest.raises(ValueError):
            catalogue_graphs(8)

    def test_triangle_versus_k4(self):
        found = find_separator(K3, complete_graph(4), 2, 6)
        assert complete_graph(6) in found
        for f in found:
            assert arrows(f, K3).arrows and not arrows(f, complete_graph(4)).arrows

    def test_same_graph_has_no_separator(self):
        assert find_separator(K3, K3, 2, 5) == []

    def test_edge_versus_triangle(self):
        found = find_separator(complete_graph(2), K3, 2, 3)
        assert complete_graph(2) in found
        # catalogue labelling may differ from path_graph's, so compare up to isomorphism
        assert any(f.n == 3 and f.num_edges == 2 for f in found)
        assert all(find_subgraph_copy(f, K3) is None or f == K3 for f in found)
        assert [f.n for f in found] == sorted(f.n for f in found)

    def test_stream_is_lazy_and_budgeted(self):
        it = iter_separators(K3, complete_graph(4), 2, 7, budget_nodes=2000)
        with pytest.raises(BudgetExceeded):
            list(it)


@pytest.mark.parametrize("q", [2, 3])
def test_all_colourings_count(q):
    assert sum(1 for _ in all_colourings(path_graph(4), q)) == q**3
