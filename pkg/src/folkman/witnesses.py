"""Deterministic reconstructions of the bundled witness graphs.

Each builder produces a specific witness graph referenced by a House of
Graphs ID, from first principles (explicit edge lists, set systems,
algebraic constructions), so the fixture files can be regenerated and
cross-checked offline.  Every build is verified against its defining
properties by the fixture script and the test suite.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph
from .constructions import circulant, petersen


def fv33_j5_witness() -> Graph:
    """The unique 11-vertex J5-free graph arrowing (3,3)^v (HoG 51287).

    Three K4s glued along a shared edge {9,10} plus three more K4s over
    the pairs {6,7}, {6,8}, {7,8}.
    """
    edges = [
        (0, 1), (1, 6), (6, 0), (0, 7), (7, 1), (1, 9), (9, 0), (0, 10), (10, 1),
        (2, 3), (3, 6), (6, 2), (2, 8), (8, 3), (3, 9), (9, 2), (2, 10), (10, 3),
        (4, 5), (5, 7), (7, 4), (4, 8), (8, 5), (5, 9), (9, 4), (4, 10), (10, 5),
        (9, 10),
        (6, 7), (7, 8), (8, 6),
    ]
    return Graph.from_edges(11, edges)


def fv333_j6_witness() -> Graph:
    """The unique 15-vertex J6-free graph arrowing (3,3,3)^v (HoG 51285).

    Vertices are the singletons and pairs of a 5-set; two pairs are
    adjacent when they intersect, every other couple is adjacent when
    disjoint.  The pairs induce the complement of the Petersen graph and
    the singletons a K5.
    """
    singles = [frozenset([i]) for i in range(5)]
    pairs = [frozenset(p) for p in combinations(range(5), 2)]
    verts = singles + pairs
    n = len(verts)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            a, b = verts[i], verts[j]
            if len(a) == 2 and len(b) == 2:
                if a & b:
                    edges.append((i, j))
            else:
                if not (a & b):
                    edges.append((i, j))
    return Graph.from_edges(n, edges)


def petersen_complement() -> Graph:
    """HoG 45703: one of the two extremal (2,2,3)^v J5-free graphs."""
    return petersen().complement()


def circulant_23_5() -> Graph:
    """HoG 21154: the other extremal graph, C10 with distances 2, 3, 5."""
    return circulant(10, {2, 3, 5})


def foster_graph() -> Graph:
    """The 90-vertex cubic Foster graph from its LCF code [17,-9,37,-37,9,-17]^15."""
    lcf = [17, -9, 37, -37, 9, -17]
    n = 90
    edges = [(i, (i + 1) % n) for i in range(n)]
    for i in range(n):
        j = (i + lcf[i % 6]) % n
        edges.append((min(i, j), max(i, j)))
    return Graph.from_edges(n, sorted(set(edges)))


def halved_foster() -> Graph:
    """Distance-two graph on the even bipartition class of the Foster graph."""
    f = foster_graph()
    evens = [v for v in range(90) if v % 2 == 0]
    index = {v: i for i, v in enumerate(evens)}
    edges = set()
    for v in evens:
        for u in f.neighbors(v):
            for w in f.neighbors(u):
                if w != v and w % 2 == 0:
                    a, b = index[v], index[w]
                    edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(45, sorted(edges))


def fv33_j4_witness() -> Graph:
    """The 45-vertex locally linear J4-free graph arrowing (3,3)^v
    (HoG 51236): the halved Foster graph plus one triangle per orbit of
    the order-3 deck transformation (vertex i joined to i+15 and i+30 in
    the halved indexing)."""
    h = halved_foster()
    edges = list(h.edges())
    for t in range(15):
        a, b, c = t, t + 15, t + 30
        edges.extend([(a, b), (b, c), (a, c)])
    return Graph.from_edges(45, sorted(set(edges)))
