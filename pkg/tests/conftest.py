import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

from ramsey_workbench.arrowing import catalogue_graphs
from ramsey_workbench.graph_core import (
    Graph,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    disjoint_union,
    path_graph,
)

sys.path.insert(0, str(Path(__file__).parent))


def eight_vertex_graphs() -> list[Graph]:
    named = [
        complete_graph(8),
        cycle_graph(8),
        path_graph(8),
        complete_multipartite(4, 2),
        complete_multipartite(2, 4),
        disjoint_union(cycle_graph(5), complete_graph(3)),
        disjoint_union(cycle_graph(3), cycle_graph(5)),
        # cube Q_3
        Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3)]),
        # Wagner graph
        Graph.from_edges(8, [(i, (i + 1) % 8) for i in range(8)] + [(i, i + 4) for i in range(4)]),
    ]
    rng = np.random.default_rng(2024)
    pairs = [(u, v) for u in range(8) for v in range(u + 1, 8)]
    rand = []
    for p in (0.2, 0.35, 0.5, 0.65, 0.8):
        for _ in range(8):
            keep = rng.random(len(pairs)) < p
            rand.append(Graph.from_edges(8, [e for e, k in zip(pairs, keep) if k]))
    return named + rand


def graph_catalogue() -> list[Graph]:
    """Every graph on 1..7 vertices up to isomorphism, plus 49 on 8 vertices."""
    return catalogue_graphs(7) + eight_vertex_graphs()


@pytest.fixture(scope="session")
def catalogue():
    return graph_catalogue()


@st.composite
def small_graphs(draw, min_n=0, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])
