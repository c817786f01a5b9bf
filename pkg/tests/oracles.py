"""Independent brute-force oracles for the test suite.

Everything here is deliberately naive (permutations, subset sweeps) and
shares no code path with the package implementations they check.
"""

from __future__ import annotations

import itertools

from folkman.graphs import Graph


def brute_contains(g: Graph, h: Graph) -> bool:
    """Subgraph containment by trying all vertex injections."""
    if h.n > g.n:
        return False
    hedges = [(a, b) for a in range(h.n) for b in range(a + 1, h.n)
              if h.has_edge(a, b)]
    for sub in itertools.permutations(range(g.n), h.n):
        if all(g.has_edge(sub[a], sub[b]) for a, b in hedges):
            return True
    return False


def brute_independence(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        ok = True
        verts = [v for v in range(g.n) if (mask >> v) & 1]
        for i, u in enumerate(verts):
            for v in verts[i + 1:]:
                if g.has_edge(u, v):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            best = max(best, len(verts))
    return best


def brute_clique(g: Graph) -> int:
    return brute_independence(g.complement())


def brute_chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for assignment in itertools.product(range(k), repeat=g.n):
            if all(assignment[u] != assignment[v] for u, v in g.edges()):
                return k
    return g.n


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
               for u in range(g.n) for v in range(u + 1, g.n)):
            return True
    return False


def brute_automorphism_count(g: Graph) -> int:
    count = 0
    for perm in itertools.permutations(range(g.n)):
        if all(g.has_edge(perm[u], perm[v]) == g.has_edge(u, v)
               for u in range(g.n) for v in range(u + 1, g.n)):
            count += 1
    return count


def all_labeled_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (mask >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield Graph(n, tuple(rows))


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return Graph(n, tuple(rows))
