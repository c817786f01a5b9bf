import pytest

from folkman.arrowing import (ArrowSpec, InstanceTooLarge, arrows_vertex,
                              bfs_vertex_order, brute_force_arrows,
                              parse_arrow_spec)
from folkman.graphs import Graph

from oracles import random_graph


def test_spec_normalization_drops_ones():
    spec = ArrowSpec((1, 3, 1, 2), "vertex").normalized()
    assert spec.targets == (3, 2)
    assert spec.dropped_ones == 2
    assert str(spec) == "(3,2)^v"


def test_spec_validation():
    with pytest.raises(ValueError):
        ArrowSpec((3, 2), "edge")
    with pytest.raises(ValueError):
        ArrowSpec((0, 3), "vertex")
    with pytest.raises(ValueError):
        ArrowSpec((3, 3), "face")


def test_parse_arrow_spec():
    assert parse_arrow_spec("v:3,3") == ArrowSpec((3, 3), "vertex")
    assert parse_arrow_spec("e:3,3") == ArrowSpec((3, 3), "edge")
    assert parse_arrow_spec("2,2,3") == ArrowSpec((2, 2, 3), "vertex")


def test_all_ones_spec_trivially_arrows():
    ok, _ = arrows_vertex(Graph.empty(3), ArrowSpec((1, 1), "vertex"))
    assert ok


def test_k4_arrows_23():
    assert arrows_vertex(Graph.complete(4), ArrowSpec.vertex(2, 3))[0]


def test_k5_arrows_33_and_223():
    assert arrows_vertex(Graph.complete(5), ArrowSpec.vertex(3, 3))[0]
    assert arrows_vertex(Graph.complete(5), ArrowSpec.vertex(2, 2, 3))[0]


def test_bipartite_never_arrows_22():
    ok, coloring = arrows_vertex(Graph.path(3), ArrowSpec.vertex(2, 2))
    assert not ok
    classes = coloring.color_classes(2)
    g = Graph.path(3)
    for cls in classes:
        assert all(not g.has_edge(u, v) for i, u in enumerate(cls) for v in cls[i + 1:])


def test_petersen_complement_arrows_223_not_33(petersen):
    cop = petersen.complement()
    assert arrows_vertex(cop, ArrowSpec.vertex(2, 2, 3))[0]
    ok, coloring = arrows_vertex(cop, ArrowSpec.vertex(3, 3))
    assert not ok and coloring is not None


def test_k3_single_color():
    assert brute_force_arrows(Graph.complete(3), ArrowSpec.vertex(3))
    assert arrows_vertex(Graph.complete(3), ArrowSpec.vertex(3))[0]


def test_bfs_order_starts_at_max_degree():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    order = bfs_vertex_order(g)
    assert order[0] == 1
    assert set(order) == set(range(5))


def test_brute_force_budget():
    with pytest.raises(InstanceTooLarge):
        brute_force_arrows(Graph.empty(80), ArrowSpec.vertex(2, 2), budget=100)


def test_witness_colorings_verified(rng):
    for _ in range(120):
        g = random_graph(rng, rng.randint(2, 8))
        for spec in [ArrowSpec.vertex(3, 3), ArrowSpec.vertex(2, 3),
                     ArrowSpec.vertex(2, 2, 3)]:
            ok, coloring = arrows_vertex(g, spec)
            if not ok:
                from folkman.patterns import clique, contains_pattern
                for i, a in enumerate(spec.targets):
                    cls = [v for v, c in enumerate(coloring.assignment) if c == i]
                    if not cls:
                        continue
                    sub = g.induced(cls)
                    if a >= 3:
                        assert not contains_pattern(sub, clique(a))
                    else:
                        assert sub.edge_count == 0


def test_permutation_invariance(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(2, 7))
        a = arrows_vertex(g, ArrowSpec.vertex(2, 3, 3))[0]
        assert arrows_vertex(g, ArrowSpec.vertex(3, 2, 3))[0] == a
        assert arrows_vertex(g, ArrowSpec.vertex(3, 3, 2))[0] == a


def test_monotone_under_edge_addition(rng):
    for _ in range(80):
        g = random_graph(rng, rng.randint(3, 7))
        nonedges = [(u, v) for u in range(g.n) for v in range(u + 1, g.n)
                    if not g.has_edge(u, v)]
        if not nonedges:
            continue
        u, v = nonedges[rng.randrange(len(nonedges))]
        bigger = g.add_edge(u, v)
        for spec in [ArrowSpec.vertex(3, 3), ArrowSpec.vertex(2, 2, 3)]:
            if arrows_vertex(g, spec)[0]:
                assert arrows_vertex(bigger, spec)[0]


def test_agrees_with_oracle_random(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7), p=rng.random())
        for spec in [ArrowSpec.vertex(3, 3), ArrowSpec.vertex(2, 3),
                     ArrowSpec.vertex(2, 2, 3)]:
            assert arrows_vertex(g, spec)[0] == brute_force_arrows(g, spec)


def test_33_implies_223_small(rng):
    """Merging the two independent classes of a (2,2,3) coloring gives a
    triangle-free class."""
    for _ in range(150):
        g = random_graph(rng, rng.randint(2, 8))
        if arrows_vertex(g, ArrowSpec.vertex(3, 3))[0]:
            assert arrows_vertex(g, ArrowSpec.vertex(2, 2, 3))[0]
