import pytest

from folkman.graphs import Graph, bits
from folkman.patterns import (Pattern, clique, co_p2p3, contains_pattern,
                              creates_pattern, custom, cycle4, jgraph,
                              parse_pattern, pattern_graph, wheel5)

from oracles import all_labeled_graphs, brute_contains, random_graph

ALL_PATTERNS = [clique(3), clique(4), clique(5), jgraph(4), jgraph(5),
                cycle4(), wheel5(), co_p2p3()]


def test_pattern_validation():
    with pytest.raises(ValueError):
        clique(2)
    with pytest.raises(ValueError):
        jgraph(2)
    with pytest.raises(ValueError):
        custom(Graph.empty(11))
    with pytest.raises(ValueError):
        Pattern("hexagon")


def test_parse_pattern():
    assert parse_pattern("J4") == jgraph(4)
    assert parse_pattern("K5") == clique(5)
    assert parse_pattern("C4") == cycle4()
    assert parse_pattern("W5") == wheel5()
    assert parse_pattern("coP2P3") == co_p2p3()
    with pytest.raises(ValueError):
        parse_pattern("X9")


def test_pattern_graphs_have_documented_shapes():
    w5 = pattern_graph(wheel5())
    assert w5.n == 5 and w5.edge_count == 8
    assert sorted(w5.degrees()) == [3, 3, 3, 3, 4]
    cp = pattern_graph(co_p2p3())
    assert cp.n == 5 and cp.edge_count == 7
    assert sorted(cp.degrees()) == [2, 3, 3, 3, 3]
    j5 = pattern_graph(jgraph(5))
    assert j5.edge_count == 9


def test_j4_inside_k4():
    assert contains_pattern(Graph.complete(4), jgraph(4))


def test_c5_triangle_free():
    assert not contains_pattern(Graph.cycle(5), clique(3))


def test_petersen_complement_is_j5_free(petersen):
    assert not contains_pattern(petersen.complement(), jgraph(5))


def test_larger_pattern_is_never_contained():
    assert not contains_pattern(Graph.complete(4), clique(5))


def test_cone_of_c4_contains_w5():
    from folkman.constructions import cone
    assert contains_pattern(cone(Graph.cycle(4)), wheel5())


@pytest.mark.parametrize("n", [3, 4, 5])
def test_fast_paths_agree_with_brute_force(n):
    for g in all_labeled_graphs(n):
        for p in ALL_PATTERNS:
            want = brute_contains(g, pattern_graph(p))
            assert contains_pattern(g, p) == want, (g.adj, str(p))


def test_fast_paths_agree_on_random_graphs(rng):
    for _ in range(400):
        g = random_graph(rng, rng.randint(4, 8), p=rng.uniform(0.2, 0.8))
        for p in ALL_PATTERNS:
            want = brute_contains(g, pattern_graph(p))
            assert contains_pattern(g, p) == want, (g.adj, str(p))


def test_custom_matcher_agrees_with_fast_paths(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(4, 9), p=0.5)
        for p in ALL_PATTERNS:
            assert contains_pattern(g, p) == contains_pattern(
                g, custom(pattern_graph(p)))


def test_clique_matches_subset_oracle_small():
    # every graph on <= 6 vertices, every clique size
    for n in range(1, 7):
        for g in all_labeled_graphs(n) if n <= 4 else ():
            for k in range(3, n + 2):
                want = brute_contains(g, Graph.complete(k))
                assert contains_pattern(g, clique(k)) == want


def test_creates_pattern_matches_full_check(rng):
    """The incremental new-vertex test equals containment on the child."""
    for _ in range(500):
        m = rng.randint(3, 8)
        g = random_graph(rng, m, p=rng.uniform(0.2, 0.8))
        nbhd = rng.randrange(1 << m)
        newbit = 1 << m
        rows = [row | newbit if (nbhd >> v) & 1 else row
                for v, row in enumerate(g.adj)]
        rows.append(nbhd)
        child = Graph(m + 1, tuple(rows))
        for p in ALL_PATTERNS:
            if contains_pattern(g, p):
                continue  # incremental test presumes a pattern-free parent
            want = contains_pattern(child, p)
            got = creates_pattern(g.adj, nbhd, p)
            assert got == want, (g.adj, nbhd, str(p))
