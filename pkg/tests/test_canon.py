import pytest

from folkman.canon import (accept_new_vertex, automorphism_group_order,
                           canon_key, canonical_form, group_elements,
                           group_order, is_automorphism, vertex_orbits)
from folkman.constructions import circulant
from folkman.graph6 import decode_graph6
from folkman.graphs import Graph

from oracles import (all_labeled_graphs, brute_automorphism_count,
                     brute_isomorphic, random_graph)


def test_relabeling_invariance_exhaustive_small():
    import itertools
    for n in range(1, 5):
        for g in all_labeled_graphs(n):
            key = canon_key(g)
            for perm in itertools.permutations(range(n)):
                assert canon_key(g.relabel(list(perm))) == key


def test_relabeling_invariance_random(rng):
    for _ in range(300):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, p=rng.random())
        key = canon_key(g)
        for _ in range(8):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canon_key(g.relabel(perm)) == key


def test_c5_relabelings_canonize_equal(rng):
    g = Graph.cycle(5)
    key = canon_key(g)
    for _ in range(100):
        perm = list(range(5))
        rng.shuffle(perm)
        assert canon_key(g.relabel(perm)) == key


def test_circulant_5_offsets_isomorphic():
    a, b = circulant(5, {1}), circulant(5, {2})
    assert brute_isomorphic(a, b)
    assert canon_key(a) == canon_key(b)


def test_k4_vs_j4_distinct():
    assert canon_key(Graph.complete(4)) != canon_key(
        Graph.complete(4).remove_edge(0, 1))


def test_distinct_classes_have_distinct_keys(rng):
    for _ in range(200):
        n = rng.randint(2, 7)
        g, h = random_graph(rng, n), random_graph(rng, n)
        same = canon_key(g) == canon_key(h)
        assert same == brute_isomorphic(g, h), (g.adj, h.adj)


def test_group_order_matches_brute_force(rng):
    named = [Graph.complete(5), Graph.cycle(5), Graph.cycle(6), Graph.path(4),
             Graph.empty(5), Graph.complete(3).disjoint_union(Graph.complete(3))]
    for g in named:
        assert automorphism_group_order(g) == brute_automorphism_count(g)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 7), p=rng.random())
        assert automorphism_group_order(g) == brute_automorphism_count(g), g.adj


def test_known_group_orders():
    from folkman.constructions import petersen
    assert automorphism_group_order(petersen()) == 120
    assert automorphism_group_order(Graph.complete(6)) == 720
    assert automorphism_group_order(Graph.cycle(8)) == 16


def test_orbits_of_path():
    orbs = vertex_orbits(Graph.path(4))
    assert sorted(map(sorted, orbs)) == [[0, 3], [1, 2]]


def test_orbits_vertex_transitive(petersen):
    assert [len(o) for o in vertex_orbits(petersen)] == [10]


def test_canonical_form_roundtrips():
    g = Graph.cycle(6)
    cf = canonical_form(g)
    assert decode_graph6(cf.graph6).n == 6
    assert cf.group_order == 12
    assert sum(len(o) for o in cf.orbits) == 6


def test_generators_are_automorphisms(rng):
    from folkman.canon import aut_generators
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9))
        for sigma in aut_generators(g):
            assert is_automorphism(g, sigma)


def test_group_elements_closure():
    gens = [(1, 0, 2), (0, 2, 1)]
    elems = group_elements(3, gens)
    assert len(elems) == 6
    assert group_order(3, gens) == 6
    assert group_elements(3, gens, cap=3) is None


def test_accept_new_vertex_consistency(rng):
    """Acceptance is isomorphism-invariant in the new vertex's orbit."""
    for _ in range(150):
        n = rng.randint(3, 7)
        g = random_graph(rng, n, p=0.5)
        ok, _ = accept_new_vertex(n, g.adj, n - 1)
        # relabel so another orbit member sits last: decision must agree
        orbs = vertex_orbits(g)
        orbit = next(o for o in orbs if n - 1 in o)
        for v in orbit:
            perm = list(range(n))
            perm[v], perm[n - 1] = perm[n - 1], perm[v]
            h = g.relabel(perm)
            ok2, _ = accept_new_vertex(n, h.adj, n - 1)
            assert ok2 == ok
