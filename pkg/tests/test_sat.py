import pytest

from folkman.arrowing import ArrowSpec, brute_force_arrows
from folkman.graphs import Graph
from folkman.sat import (CnfFormula, SolverTimeout, arrows_edge_33,
                         encode_cnf_33, solve_cnf, to_dimacs,
                         verify_edge_coloring_33)

from oracles import random_graph


def test_encoding_k3():
    f = encode_cnf_33(Graph.complete(3))
    assert f.num_vars == 3
    assert len(f.clauses) == 2
    assert set(map(abs, f.clauses[0])) == {1, 2, 3}


def test_encoding_k4():
    f = encode_cnf_33(Graph.complete(4))
    assert f.num_vars == 6 and len(f.clauses) == 8


def test_encoding_k6():
    f = encode_cnf_33(Graph.complete(6))
    assert f.num_vars == 15 and len(f.clauses) == 40


def test_two_clauses_per_triangle_shape(rng):
    for _ in range(50):
        g = random_graph(rng, rng.randint(3, 8))
        f = encode_cnf_33(g)
        from folkman.graphs import triangle_count
        assert len(f.clauses) == 2 * triangle_count(g)
        assert all(len(c) == 3 for c in f.clauses)
        positives = [c for c in f.clauses if all(l > 0 for l in c)]
        negatives = [c for c in f.clauses if all(l < 0 for l in c)]
        assert len(positives) == len(negatives) == len(f.clauses) // 2


def test_dimacs_format():
    f = encode_cnf_33(Graph.complete(3))
    text = to_dimacs(f)
    lines = text.strip().splitlines()
    assert lines[0] == "p cnf 3 2"
    assert all(line.endswith(" 0") for line in lines[1:])
    assert len(lines) == 3


def test_k6_arrows_k5_does_not():
    assert arrows_edge_33(Graph.complete(6))[0] is True
    ok, coloring = arrows_edge_33(Graph.complete(5))
    assert ok is False
    assert verify_edge_coloring_33(Graph.complete(5), coloring)


def test_triangle_free_never_arrows():
    for g in (Graph.cycle(5), Graph.path(4), Graph.empty(3)):
        ok, coloring = arrows_edge_33(g)
        assert ok is False and coloring is not None


def test_sat_matches_brute_force(rng):
    for _ in range(250):
        g = random_graph(rng, rng.randint(2, 6), p=rng.random())
        want = brute_force_arrows(g, ArrowSpec.edge33())
        assert arrows_edge_33(g)[0] == want, g.adj


def test_sat_matches_brute_force_n7_sample(rng):
    for _ in range(60):
        g = random_graph(rng, 7, p=rng.uniform(0.4, 0.9))
        want = brute_force_arrows(g, ArrowSpec.edge33())
        assert arrows_edge_33(g)[0] == want, g.adj


def test_solver_timeout_is_explicit():
    g = Graph.complete(9)
    with pytest.raises(SolverTimeout):
        arrows_edge_33(g, timeout=0.0)


def test_solve_with_assumptions():
    f = encode_cnf_33(Graph.complete(3))
    # force all three edges equal: unsatisfiable
    assert solve_cnf(f, assumptions=(1, 2, 3)) is None
    assert solve_cnf(f, assumptions=(-1, -2, -3)) is None
    model = solve_cnf(f, assumptions=(1, 2))
    assert model is not None and model[0] and model[1] and not model[2]


def test_unit_clause_handling():
    f = CnfFormula(2, ((1,), (-1, 2)), {}, ())
    model = solve_cnf(f)
    assert model == [True, True]
    f = CnfFormula(1, ((1,), (-1,)), {}, ())
    assert solve_cnf(f) is None
