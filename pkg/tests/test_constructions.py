import pytest

from degpow import contains_subgraph, degree_power_sum, is_isomorphic, subgraph_count
from degpow.coloring import chromatic_number
from degpow.constructions import (
    ConstructionError,
    almost_regular,
    catalog,
    clique,
    complete_bipartite,
    complete_multipartite,
    cycle,
    friendship,
    girth5_almost_regular,
    h_graph,
    h_prime,
    star,
    t0_member,
    theta_chain,
    turan,
)
from degpow.graph import join, empty_graph


def _parts_edges(g, offset, size):
    return [(u, v) for u, v in g.edges() if offset <= u < offset + size and offset <= v < offset + size]


def test_multipartite_examples():
    k23 = complete_multipartite([2, 3])
    assert is_isomorphic(k23, complete_bipartite(2, 3)) and k23.num_edges == 6
    t = turan(7, 3)
    assert sorted(t.degrees()) == [4, 4, 4, 5, 5, 5, 5]
    assert degree_power_sum(t, 2) == 148
    assert complete_multipartite([1, 1, 1, 1]) == clique(4)


@pytest.mark.parametrize("parts", [[2, 3], [1, 2, 3], [3, 3, 3], [2, 2, 2, 2]])
def test_multipartite_has_no_larger_clique(parts):
    g = complete_multipartite(parts)
    assert not contains_subgraph(clique(len(parts) + 1), g)
    assert contains_subgraph(clique(len(parts)), g)


def test_multipartite_order_cap():
    with pytest.raises(Exception):
        complete_multipartite([40, 30])


def test_friendship_examples():
    assert friendship(5).degree_sequence() == (4, 2, 2, 2, 2) and friendship(5).num_edges == 6
    assert friendship(6).degree_sequence() == (5, 2, 2, 2, 2, 1) and friendship(6).num_edges == 7
    assert friendship(1) == clique(1)


@pytest.mark.parametrize("n", range(1, 13))
def test_friendship_c4_free(n):
    assert not contains_subgraph(cycle(4), friendship(n))


def test_friendship_edge_formula():
    for n in range(1, 65):
        g = friendship(n)
        assert g.num_edges == 3 * (n - 1) // 2
        assert sum(g.degrees()) % 2 == 0


def test_h_graph_examples():
    for n in range(2, 9):
        assert is_isomorphic(h_graph(2, n), star(n - 1))
    assert h_graph(3, 6).degree_sequence() == (5, 5, 2, 2, 2, 2)
    for s in range(2, 7):
        assert h_graph(s, s) == clique(s)
    with pytest.raises(ConstructionError):
        h_graph(5, 4)
    with pytest.raises(ConstructionError):
        h_graph(1, 4)


def _girth_ok(g):
    return not contains_subgraph(clique(3), g) and not contains_subgraph(cycle(4), g)


def _almost_regular_degrees(g, d):
    degs = sorted(g.degrees())
    if g.n * d % 2:
        return degs == [d - 1] + [d] * (g.n - 1)
    return degs == [d] * g.n


def test_girth5_examples():
    assert is_isomorphic(girth5_almost_regular(5, 2), cycle(5))
    p = girth5_almost_regular(10, 3)
    assert _girth_ok(p) and set(p.degrees()) == {3}
    assert is_isomorphic(girth5_almost_regular(7, 2), cycle(7))


@pytest.mark.parametrize(
    "m, d", [(1, 0), (2, 1), (3, 1), (6, 1), (5, 2), (11, 2), (10, 3), (11, 3), (14, 3), (20, 3), (19, 4), (26, 4)]
)
def test_girth5_invariants(m, d):
    g = girth5_almost_regular(m, d)
    assert g.n == m
    assert _girth_ok(g)
    assert _almost_regular_degrees(g, d)


def test_girth5_deterministic_and_seeded():
    assert girth5_almost_regular(16, 3) == girth5_almost_regular(16, 3)
    g = girth5_almost_regular(16, 3, seed=5)
    assert _girth_ok(g) and _almost_regular_degrees(g, 3)


@pytest.mark.parametrize("m, d", [(4, 2), (9, 3), (3, 2), (16, 4)])
def test_girth5_infeasible_is_an_error(m, d):
    with pytest.raises(ConstructionError):
        girth5_almost_regular(m, d)


def test_h_prime_examples():
    for n in range(3, 15):
        assert is_isomorphic(h_prime(2, 2, n), friendship(n))
    assert not contains_subgraph(complete_bipartite(2, 3), h_prime(2, 3, 11))
    g = h_prime(3, 3, 12)
    assert sum(1 for d in g.degrees() if d == 11) == 2


def _feasible_h_prime(s, t, n):
    try:
        return h_prime(s, t, n)
    except ConstructionError:
        return None


@pytest.mark.parametrize("s, t", [(2, 2), (2, 3), (3, 3)])
def test_h_prime_kst_free(s, t):
    built = 0
    for n in range(s, 41):
        g = _feasible_h_prime(s, t, n)
        if g is None:
            continue
        built += 1
        assert not contains_subgraph(complete_bipartite(s, t), g), n
        assert sum(1 for d in g.degrees() if d == n - 1) >= s - 1
    assert built >= 25


def test_t0_examples():
    g = t0_member([3, 3], 2)
    assert len(_parts_edges(g, 0, 3)) == 1 and len(_parts_edges(g, 3, 3)) == 1
    assert g.num_edges == 9 + 2
    assert t0_member([4, 4], 1) == complete_bipartite(4, 4)
    g = t0_member([5, 5], 3)
    inner = [e for e in g.edges() if (e[0] < 5) == (e[1] < 5)]
    assert len(inner) == 10
    assert is_isomorphic(g.induced(range(5)), cycle(5))


@pytest.mark.parametrize("parts", [[1], [2, 3], [4, 4, 4], [5, 1, 3]])
def test_t0_a1_is_multipartite(parts):
    assert t0_member(parts, 1) == complete_multipartite(parts)


@pytest.mark.parametrize("m, ell", [(m, ell) for m in range(1, 12) for ell in range(0, 6) if m >= ell + 1])
def test_almost_regular_degrees(m, ell):
    g = almost_regular(m, ell)
    degs = sorted(g.degrees())
    if m * ell % 2:
        assert degs == [ell - 1] + [ell] * (m - 1)
    else:
        assert degs == [ell] * m


def test_catalog_examples():
    bow = catalog("book_B_k1", 3)
    assert bow.n == 5 and bow.num_edges == 6 and chromatic_number(bow) == 3
    assert is_isomorphic(catalog("complete_split_K1aa", 2, 2), complete_multipartite([1, 2, 2]))
    assert catalog("cycle", 5) == cycle(5)
    with pytest.raises(ConstructionError):
        catalog("nonsense", 3)
    with pytest.raises(ConstructionError):
        catalog("cycle", 5, 6)


def test_theta_examples():
    g = theta_chain(6, 2, "paths3")
    assert subgraph_count(cycle(6), g) >= 4
    assert subgraph_count(cycle(6), g) == 6
    assert contains_subgraph(cycle(9), theta_chain(9, 1, "paths3"))
    small = theta_chain(6, 1, "edge")
    assert is_isomorphic(small, cycle(4))


@pytest.mark.parametrize("ell", range(6, 13))
def test_theta_default_closure_contains_target_cycle(ell):
    g = theta_chain(ell, 2)
    assert contains_subgraph(cycle(ell), g)
    assert not contains_subgraph(cycle(4), g)


def test_theta_copies_grow_with_width():
    counts = [subgraph_count(cycle(9), theta_chain(9, w)) for w in (1, 2, 3)]
    assert counts == [1, 8, 27]


def test_theta_errors():
    with pytest.raises(ConstructionError):
        theta_chain(5)
    with pytest.raises(ConstructionError):
        theta_chain(9, 2, "spiral")
    with pytest.raises(ConstructionError):
        theta_chain(30, 5)


def test_join_matches_h_graph():
    assert join(clique(2), empty_graph(4)) == h_graph(3, 6)
