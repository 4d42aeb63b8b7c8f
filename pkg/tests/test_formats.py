import pytest
from hypothesis import given, strategies as st

from freeboole.errors import ParseError
from freeboole.formats import (
    MapSpec, any_graph_from_text, format_graph, format_hypergraph, graph_from_text,
    hypergraph_from_text, map_from_text, parse_graph, parse_map, poset_from_text,
)
from freeboole.graphs import Graph, Hypergraph


def test_graph_example():
    g = graph_from_text("c path\np edge 3 2\ne 1 2\ne 2 3\n")
    assert g == Graph.path(3)


def test_duplicate_edges_are_merged():
    g = graph_from_text("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n")
    assert g.edges == [(0, 1)]


def test_hypergraph_example():
    h = hypergraph_from_text("p hyper 3 1\nh 1 2 3\n")
    assert h == Hypergraph.from_edges(3, [(0, 1, 2)])


def test_poset_example():
    p = poset_from_text("p order 3 2\nr 1 2\nr 2 3\n")
    assert p.less(0, 2) and p.less(0, 1) and not p.less(2, 0)


def test_map_example():
    mapping = map_from_text("p map 2 3\nm 1 1 3\nm 2\n")
    assert mapping == MapSpec(2, 3, ((0, 2), ()))


def test_any_graph_dispatch():
    assert isinstance(any_graph_from_text("p edge 2 1\ne 1 2\n"), Graph)
    assert isinstance(any_graph_from_text("p hyper 2 1\nh 1 2\n"), Hypergraph)
    with pytest.raises(ParseError):
        any_graph_from_text("p order 2 0\n")


@pytest.mark.parametrize("text,line", [
    ("p edge 3 1\ne 1 4\n", 2),
    ("p edge 3 1\ne 2 2\n", 2),
    ("p edge 3 1\ne 1\n", 2),
    ("p edge 3 1\nc fine\ne x y\n", 3),
    ("e 1 2\np edge 3 1\n", 1),
    ("p edge 3\n", 1),
    ("p edge 3 1\np edge 3 1\n", 2),
    ("p hyper 3 1\nh 2 2\n", 2),
    ("p hyper 3 1\ne 1 2\n", 2),
    ("p order 3 3\nr 1 2\nr 2 3\nr 3 1\n", 4),
    ("p map 2 2\nm 1 1\nm 1 2\n", 3),
    ("p map 2 2\nm 1 3\n", 2),
    ("p banana 1 1\n", 1),
])
def test_errors_carry_line_numbers(text, line):
    kind = text.split("p ", 1)[1].split()[0] if "p " in text else "edge"
    parser = {"hyper": hypergraph_from_text, "order": poset_from_text,
              "map": map_from_text}.get(kind, graph_from_text)
    with pytest.raises(ParseError) as err:
        parser(text, "f.txt")
    assert err.value.line == line and str(err.value).startswith(f"f.txt:{line}:")


def test_missing_header_and_image():
    with pytest.raises(ParseError) as err:
        graph_from_text("c nothing\n")
    assert err.value.line is None
    with pytest.raises(ParseError):
        map_from_text("p map 2 1\nm 1 1\n")
    with pytest.raises(ParseError):
        graph_from_text("p hyper 2 1\nh 1 2\n")


def test_file_wrappers(tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("p edge 2 1\ne 1 2\n")
    assert parse_graph(path) == Graph.complete(2)
    with pytest.raises(ParseError) as err:
        parse_map(tmp_path / "missing.txt")
    assert "missing.txt" in str(err.value)


@st.composite
def hypergraphs(draw):
    n = draw(st.integers(2, 6))
    edge = st.sets(st.integers(0, n - 1), min_size=2, max_size=n)
    return Hypergraph.from_edges(n, draw(st.lists(edge, max_size=6)))


@given(hypergraphs())
def test_hypergraph_wire_roundtrip(h):
    assert hypergraph_from_text(format_hypergraph(h, ["generated"])) == h
    if h.is_graph():
        g = h.to_graph()
        assert graph_from_text(format_graph(g)) == g
