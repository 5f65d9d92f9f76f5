import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import small_graphs
from ramsey_workbench import formats
from ramsey_workbench.graph_core import Graph, Hypergraph, complete_graph, cycle_graph, petersen_graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9))
def test_graph6_matches_networkx(g):
    ours = formats.to_graph6(g)
    theirs = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert ours == theirs
    assert formats.from_graph6(ours) == g


def test_graph6_large_n_header():
    g = Graph.from_edges(70, [(0, 69), (5, 6)])
    text = formats.to_graph6(g)
    assert text.startswith("~")
    assert text == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert formats.from_graph6(text) == g


def test_graph6_known_strings():
    assert formats.to_graph6(petersen_graph()) == "IheA@GUAo"
    assert formats.to_graph6(complete_graph(6)) == "E~~w"
    assert formats.from_graph6(">>graph6<<E~~w") == complete_graph(6)


def test_graph6_errors_carry_position():
    with pytest.raises(formats.FormatError) as exc:
        formats.from_graph6("E~ w")
    assert exc.value.position == 2
    with pytest.raises(formats.FormatError) as exc:
        formats.from_graph6("E~~")
    assert exc.value.position == 1


def test_json_canonical_and_roundtrip():
    g = Graph.from_edges(4, [(2, 3), (0, 1)])
    text = formats.graph_to_json(g)
    assert text == '{"n":4,"edges":[[0,1],[2,3]]}\n'
    assert formats.graph_from_json(text) == g


def test_json_errors():
    with pytest.raises(formats.FormatError) as exc:
        formats.graph_from_json('{"n": 3,\n "edges": [[0, 1],, ]}')
    assert exc.value.position[0] == 2
    with pytest.raises(formats.FormatError):
        formats.graph_from_json('{"n": 3, "edges": [[1, 0]]}')


def test_hypergraph_json():
    h = Hypergraph.from_edges(5, 3, [(4, 3, 2), (2, 1, 0)])
    text = formats.hypergraph_to_json(h)
    assert text == '{"n":5,"k":3,"hyperedges":[[0,1,2],[2,3,4]]}\n'
    assert formats.hypergraph_from_json(text) == h


def test_dot_export():
    dot = formats.to_dot(cycle_graph(3))
    assert dot.splitlines()[0] == "graph G {"
    assert "  0 -- 1;" in dot and "  1 -- 2;" in dot and dot.endswith("}\n")


def test_read_graph_both_formats(tmp_path):
    g = petersen_graph()
    (tmp_path / "p.g6").write_text(formats.to_graph6(g) + "\n")
    (tmp_path / "p.json").write_text(formats.graph_to_json(g))
    assert formats.read_graph(tmp_path / "p.g6") == g
    assert formats.read_graph(tmp_path / "p.json") == g


def test_write_atomic(tmp_path):
    p = formats.write_atomic(tmp_path / "sub" / "x.txt", "hello\n")
    assert p.read_text() == "hello\n"
    assert [f.name for f in p.parent.iterdir()] == ["x.txt"]
