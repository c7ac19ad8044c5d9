import random

import pytest
from hypothesis import given, settings, strategies as st

from degpow import Graph, GraphError, build_graph, complement, empty_graph, join, parse_edge_list
from degpow.graph import MAX_ORDER, disjoint_union, format_edge_list, from_adjacency

from oracles import random_graph


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_build_examples():
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert k3.degrees() == (2, 2, 2)
    assert build_graph(1).degree_sequence() == (0,)
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    assert set(c5.degrees()) == {2}


def test_duplicates_collapse():
    g = build_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.num_edges == 1 and g.edges() == [(0, 1)]


@pytest.mark.parametrize(
    "n, edges",
    [(3, [(0, 3)]), (3, [(1, 1)]), (65, []), (-1, []), (2, [(-1, 0)])],
)
def test_build_errors(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_max_order_supported():
    g = build_graph(MAX_ORDER, [(0, 63), (62, 63)])
    assert g.degree(63) == 2


def test_complement_examples():
    k3 = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert complement(k3) == empty_graph(3)
    assert complement(empty_graph(5)).num_edges == 10
    c5 = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    cc = complement(c5)
    assert set(cc.degrees()) == {2} and cc.num_edges == 5


def test_join_examples():
    s4 = join(empty_graph(1), empty_graph(4))
    assert s4.degrees() == (4, 1, 1, 1, 1)
    h = join(build_graph(2, [(0, 1)]), empty_graph(4))
    assert h.degree_sequence() == (5, 5, 2, 2, 2, 2)
    k23 = join(empty_graph(2), empty_graph(3))
    assert k23.num_edges == 6 and k23.degree_sequence() == (3, 3, 2, 2, 2)


def test_join_order_cap():
    with pytest.raises(GraphError):
        join(empty_graph(40), empty_graph(30))


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_structure_invariants(g):
    assert sum(g.degrees()) == 2 * g.num_edges
    for u in range(g.n):
        assert not g.has_edge(u, u)
        for v in range(g.n):
            assert g.has_edge(u, v) == g.has_edge(v, u)
    assert complement(complement(g)) == g
    assert g.num_edges + complement(g).num_edges == g.n * (g.n - 1) // 2


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=8), graphs(max_n=8))
def test_join_edge_count(g1, g2):
    j = join(g1, g2)
    assert j.num_edges == g1.num_edges + g2.num_edges + g1.n * g2.n
    for v in range(g1.n):
        assert j.degree(v) == g1.degree(v) + g2.n
    assert sum(j.degrees()) % 2 == 0


def test_immutable_edits():
    g = build_graph(3, [(0, 1)])
    h = g.add_edge(1, 2)
    assert g.num_edges == 1 and h.num_edges == 2
    assert h.remove_edge(1, 2) == g
    with pytest.raises(Exception):
        g.n = 5


def test_isolated_vertices_matter():
    assert build_graph(3, [(0, 1)]) != build_graph(2, [(0, 1)])
    assert build_graph(3, [(0, 1)]).strip_isolated() == build_graph(2, [(0, 1)])


def test_edge_list_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(0, 15))
        assert parse_edge_list(format_edge_list(g)) == g
    assert parse_edge_list("4: 0-1, 2-3") == build_graph(4, [(0, 1), (2, 3)])
    assert parse_edge_list("3:") == empty_graph(3)


@pytest.mark.parametrize("text", ["x: 0-1", "3: 0-", "3: 0-5", "3 0-1", "2: 1-1"])
def test_edge_list_errors(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_adjacency_round_trip():
    rng = random.Random(5)
    g = random_graph(rng, 9)
    assert from_adjacency(g.adjacency_matrix()) == g


def test_relabel_and_union():
    g = build_graph(3, [(0, 1)])
    assert g.relabel([2, 0, 1]) == build_graph(3, [(2, 0)])
    u = disjoint_union(g, g)
    assert u.n == 6 and u.edges() == [(0, 1), (3, 4)]
    assert isinstance(u, Graph)
