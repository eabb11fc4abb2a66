import math
import random

import pytest
from hypothesis import given, strategies as st

from slee.errors import ArgumentError, ContractError
from slee.families import make_cqs, make_cycle, make_g1, make_g2, make_gd, make_gmin2, make_path, make_star
from slee.graphs import (
    INFINITY,
    Graph,
    degree,
    diameter,
    distance,
    is_connected,
    is_unicyclic,
    non_pendent_neighbors,
    to_dot,
    unique_cycle,
)
from testutil import random_graph


def test_graph_normalizes_and_sorts_edges():
    g = Graph(4, [(2, 1), (0, 3)])
    assert g.edges == ((0, 3), (1, 2))
    assert g.adjacency == ((3,), (2,), (1,), (0,))


def test_graph_rejects_self_loops_duplicates_and_range():
    with pytest.raises(ArgumentError):
        Graph(3, [(0, 0)])
    with pytest.raises(ArgumentError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ArgumentError):
        Graph(3, [(0, 3)])


def test_graph_is_immutable_and_hashable():
    g = Graph(2, [(0, 1)])
    with pytest.raises(AttributeError):
        g.n = 5
    assert hash(g) == hash(Graph(2, [(0, 1)]))
    assert g == Graph(2, [(0, 1)])
    assert g != Graph(2)


def test_degree_examples():
    assert all(degree(make_cycle(3), v) == 2 for v in range(3))
    assert degree(make_star(4), 0) == 3
    # 3 pendants plus 2 cycle neighbors on the loaded vertex
    assert degree(make_g1(6), 0) == 5


def test_degree_out_of_range():
    with pytest.raises(ArgumentError):
        degree(make_cycle(3), 3)


@given(st.integers(2, 8), st.integers(0, 2**28))
def test_handshake_lemma(n, seed):
    g = random_graph(random.Random(seed), n)
    assert sum(degree(g, v) for v in range(n)) == 2 * g.m


def test_is_unicyclic_examples():
    assert is_unicyclic(make_cycle(4))
    assert not is_unicyclic(make_path(4))
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert two_triangles.m == two_triangles.n and not is_unicyclic(two_triangles)


def test_unique_cycle_examples():
    assert unique_cycle(make_cycle(5)) == (0, 1, 2, 3, 4)
    assert unique_cycle(make_g2(6)) == (0, 1, 2)
    for n in (5, 7, 9):
        assert len(unique_cycle(make_gmin2(n))) == n - 1


def test_unique_cycle_is_deterministic_and_rooted_at_minimum():
    # same cycle relabeled: 2-4-6 triangle with pendants elsewhere
    g = Graph(7, [(2, 4), (4, 6), (2, 6), (0, 2), (1, 4), (3, 6), (3, 5)])
    cyc = unique_cycle(g)
    assert cyc[0] == 2 and cyc[1] == 4  # smaller-labeled neighbor first
    assert set(cyc) == {2, 4, 6}


def test_unique_cycle_contract_error():
    with pytest.raises(ContractError):
        unique_cycle(make_path(4))


def test_unique_cycle_deleting_any_cycle_edge_gives_tree():
    for g in (make_g2(7), make_gmin2(6), make_cqs(4, [1, 0, 2, 0])):
        cyc = unique_cycle(g)
        assert 3 <= len(cyc) <= g.n
        for i in range(len(cyc)):
            chopped = g.remove_edges([(cyc[i], cyc[(i + 1) % len(cyc)])])
            assert is_connected(chopped) and chopped.m == chopped.n - 1


def test_distance_examples():
    g = make_gd(6, 3)
    assert distance(g, 0, 0) == 0
    assert distance(make_path(4), 0, 3) == 3
    assert distance(g, 0, 3) == 3


def test_distance_disconnected_is_infinite():
    g = Graph(4, [(0, 1)])
    assert distance(g, 0, 3) == INFINITY
    assert math.isinf(distance(g, 2, 3))


def test_diameter_examples():
    assert diameter(make_cycle(6)) == 3
    for n in range(5, 10):
        assert diameter(make_g1(n)) == 2
    for n, d in [(5, 2), (6, 3), (8, 4), (9, 7)]:
        assert diameter(make_gd(n, d)) == d


def test_diameter_disconnected_raises():
    with pytest.raises(ContractError):
        diameter(Graph(3, [(0, 1)]))


def test_non_pendent_neighbors():
    g = make_g2(6)  # v1 has pendants (degree 1) and cycle neighbors (degree >= 2)
    assert non_pendent_neighbors(g, 0) == {1, 2}
    assert non_pendent_neighbors(g, 2) == {0, 1}


def test_add_remove_edges_return_new_graphs():
    g = make_path(3)
    g2 = g.add_edges([(0, 2)])
    assert g.m == 2 and g2.m == 3
    g3 = g2.remove_edges([(0, 2)])
    assert g3 == g
    with pytest.raises(ArgumentError):
        g.remove_edges([(0, 2)])


def test_to_dot_lists_edges_and_isolated_vertices():
    text = to_dot(Graph(3, [(0, 1)]))
    assert "0 -- 1;" in text and "2;" in text and text.startswith("graph G {")
