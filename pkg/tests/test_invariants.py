import pytest

from folkman.graphs import Graph
from folkman.invariants import (chromatic_number, clique_number,
                                independence_number, max_clique,
                                max_independent_set, proper_coloring)
from folkman.patterns import clique, contains_pattern

from oracles import (all_labeled_graphs, brute_chromatic, brute_clique,
                     brute_independence, random_graph)


def test_c5():
    g = Graph.cycle(5)
    assert independence_number(g) == 2
    assert clique_number(g) == 2
    assert chromatic_number(g) == 3


def test_complete_graphs():
    for n in (2, 4, 6):
        assert chromatic_number(Graph.complete(n)) == n
        assert clique_number(Graph.complete(n)) == n
        assert independence_number(Graph.complete(n)) == 1


def test_petersen_independence(petersen):
    # frozen from the subset-sweep oracle
    assert brute_independence(petersen) == 4
    assert independence_number(petersen) == 4


def test_max_clique_is_a_clique(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 12))
        cl = max_clique(g)
        assert all(g.has_edge(u, v) for i, u in enumerate(cl) for v in cl[i + 1:])
        ind = max_independent_set(g)
        assert all(not g.has_edge(u, v) for i, u in enumerate(ind) for v in ind[i + 1:])


def test_invariants_match_brute_small(rng):
    for _ in range(150):
        g = random_graph(rng, rng.randint(1, 8), p=rng.random())
        assert independence_number(g) == brute_independence(g)
        assert clique_number(g) == brute_clique(g)


def test_chromatic_matches_brute(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 7), p=rng.random())
        assert chromatic_number(g) == brute_chromatic(g), g.adj


def test_proper_coloring_is_proper(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 10))
        k = chromatic_number(g)
        colors = proper_coloring(g, k)
        assert colors is not None
        assert all(colors[u] != colors[v] for u, v in g.edges())
        if g.edge_count:
            assert proper_coloring(g, k - 1) is None


def test_alpha_equals_complement_clique_exhaustive():
    """alpha(g) equals the largest k with a K_k in the complement."""
    from folkman.invariants import clique_number
    from folkman.genfree import GenFilter, generate_free_graphs
    for n in range(1, 8):
        for g in generate_free_graphs(GenFilter(n)):
            alpha = independence_number(g)
            comp = g.complement()
            assert clique_number(comp) == alpha
            if alpha >= 3:
                assert contains_pattern(comp, clique(alpha))
            if 3 <= alpha + 1 <= n:
                assert not contains_pattern(comp, clique(alpha + 1))


@pytest.mark.long
def test_alpha_complement_cross_check_n8():
    from folkman.genfree import GenFilter, generate_free_graphs
    for g in generate_free_graphs(GenFilter(8)):
        assert independence_number(g) == clique_number(g.complement())


def test_mycielskian_properties():
    from folkman.constructions import grotzsch
    g = grotzsch()
    assert g.n == 11
    assert clique_number(g) == 2
    assert chromatic_number(g) == 4
