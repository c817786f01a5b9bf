import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from folkman.graphs import Coloring, Graph, GraphError, triangle_count, triangles

from oracles import all_labeled_graphs, random_graph


def test_validation_rejects_asymmetry():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0b00))


def test_validation_rejects_loops():
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b11))


def test_validation_rejects_large_order():
    with pytest.raises(GraphError):
        Graph.empty(129)


def test_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.degree(1) == 2
    assert g.neighbors(1) == [0, 2]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.edge_count == 3
    assert g.has_edge(2, 1) and not g.has_edge(0, 3)


def test_complement_involution():
    g = Graph.cycle(5)
    assert g.complement().complement() == g


def test_c5_self_complementary():
    from folkman.canon import canon_key
    g = Graph.cycle(5)
    assert canon_key(g.complement()) == canon_key(g)


def test_complement_of_k5_is_empty():
    assert Graph.complete(5).complement() == Graph.empty(5)


def test_triangles_k4():
    assert triangles(Graph.complete(4)) == [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]


def test_triangles_c5_empty():
    assert triangles(Graph.cycle(5)) == []


@pytest.mark.parametrize("n", range(3, 11))
def test_triangle_count_complete(n):
    assert triangle_count(Graph.complete(n)) == n * (n - 1) * (n - 2) // 6


def test_induced_and_delete():
    g = Graph.complete(5)
    assert g.delete_vertex(0) == Graph.complete(4)
    assert g.induced([1, 3]) == Graph.complete(2)


def test_relabel_roundtrip(rng):
    for _ in range(30):
        g = random_graph(rng, 7)
        perm = list(range(7))
        rng.shuffle(perm)
        inv = [0] * 7
        for i, p in enumerate(perm):
            inv[p] = i
        assert g.relabel(perm).relabel(inv) == g


def test_connectivity():
    assert Graph.cycle(5).is_connected()
    assert not Graph.complete(3).disjoint_union(Graph.empty(1)).is_connected()
    assert Graph.cycle(5).is_two_connected()
    assert not Graph.path(4).is_two_connected()


@given(st.integers(1, 20), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None)
def test_degree_sum_is_twice_edges(n, rnd):
    g = random_graph(rnd, n)
    assert sum(g.degrees()) == 2 * g.edge_count


def test_all_graphs_n4_triangle_counts_match_brute():
    for g in all_labeled_graphs(4):
        naive = sum(
            1
            for a in range(4) for b in range(a + 1, 4) for c in range(b + 1, 4)
            if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))
        assert triangle_count(g) == naive


def test_coloring_total_and_classes():
    c = Coloring("vertex", (0, 1, 0, 2))
    assert c.color_classes(3) == [[0, 2], [1], [3]]
    with pytest.raises(ValueError):
        Coloring("face", (0,))
