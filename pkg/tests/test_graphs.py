import networkx as nx
import pytest
from hypothesis import given, strategies as st

from freeboole.errors import BudgetError, PreconditionError
from freeboole.graphs import (
    Graph, Hypergraph, Poset, all_graphs, amalgamate, comparability_graph, complement,
    disjoint_union, enumerate_anticliques, enumerate_cliques, find_isomorphism,
    graph_classes, graphs_isomorphic, is_graph_homomorphism, join,
)

import oracles


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph.from_edges(n, chosen)


@st.composite
def hypergraphs(draw, max_n=6):
    n = draw(st.integers(2, max_n))
    edge = st.sets(st.integers(0, n - 1), min_size=2, max_size=min(n, 4))
    return Hypergraph.from_edges(n, draw(st.lists(edge, max_size=6)))


def to_nx(g):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges)
    return out


@given(hypergraphs())
def test_anticliques_match_brute_force(h):
    assert list(enumerate_anticliques(h).anticliques) == oracles.anticliques(h.n, h.edge_masks())


@given(graphs())
def test_cliques_are_anticliques_of_complement(g):
    cliques = enumerate_cliques(g).sets()
    assert all(g.adjacent(u, v) for c in cliques for i, u in enumerate(c) for v in c[i + 1:])
    assert len(cliques) == len(enumerate_anticliques(complement(g)))


def test_small_counts():
    assert len(enumerate_anticliques(Graph.complete(4))) == 5
    assert len(enumerate_anticliques(Graph.path(3))) == 5
    assert len(enumerate_anticliques(Graph.empty(3))) == 8


def test_anticlique_cap():
    with pytest.raises(BudgetError) as err:
        enumerate_anticliques(Graph.empty(6), cap=10)
    assert err.value.limit == "anticlique_cap"


@given(graphs(max_n=6), graphs(max_n=6))
def test_isomorphism_matches_networkx(g, h):
    assert graphs_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
    f = find_isomorphism(g, h)
    if f is not None:
        assert is_graph_homomorphism(f, g, h) and sorted(f) == list(range(h.n))


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34)])
def test_graph_class_counts(n, count):
    assert len(graph_classes(n)) == count


def test_all_graphs_count():
    assert sum(1 for _ in all_graphs(4)) == 64


def test_hypergraph_basics():
    h = Hypergraph.from_edges(4, [(0, 1, 2), (0, 1), (2, 3)])
    assert h.max_edge_size == 3 and not h.is_normalized()
    assert h.normalize().edge_sets == [(0, 1), (2, 3)]
    with pytest.raises(ValueError):
        Hypergraph.from_edges(3, [(1,)])
    with pytest.raises(PreconditionError):
        h.to_graph()
    assert Hypergraph.from_edges(3, [(0, 2)]).to_graph().edges == [(0, 2)]


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0))


@given(graphs(max_n=4), graphs(max_n=4))
def test_union_and_join_edge_counts(g, h):
    u = disjoint_union([g, h])
    j = join([g, h])
    assert u.n == j.n == g.n + h.n
    assert u.num_edges == g.num_edges + h.num_edges
    assert j.num_edges == u.num_edges + g.n * h.n


def test_poset():
    p = Poset.from_relations(3, [(0, 1), (1, 2)])
    assert p.less(0, 2) and not p.less(2, 0)
    assert comparability_graph(p).num_edges == 3
    assert comparability_graph(Poset.antichain(3)).num_edges == 0
    with pytest.raises(ValueError):
        Poset.from_relations(2, [(0, 1), (1, 0)])


def test_amalgamate_k4s_over_edge():
    k4 = Graph.complete(4)
    g, maps = amalgamate([k4, k4], Graph.complete(2), [[0, 1], [0, 1]])
    assert g.n == 6 and g.num_edges == 11
    assert maps[0][:2] == [0, 1] == maps[1][:2]
    assert not g.adjacent(maps[0][2], maps[1][2])


def test_amalgamate_empty_shared_is_disjoint_union():
    g, _ = amalgamate([Graph.path(3), Graph.complete(2)], Graph.empty(0), [[], []])
    assert graphs_isomorphic(g, disjoint_union([Graph.path(3), Graph.complete(2)]))


def test_amalgamate_rejects_bad_embeddings():
    k3 = Graph.complete(3)
    with pytest.raises(PreconditionError):
        amalgamate([k3], Graph.empty(2), [[0, 1]])
    with pytest.raises(PreconditionError):
        amalgamate([k3], Graph.complete(2), [[0, 0]])
    with pytest.raises(PreconditionError):
        amalgamate([k3, k3], Graph.complete(2), [[0, 1]])
