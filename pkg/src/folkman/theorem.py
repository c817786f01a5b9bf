"""Structural checks for minimal co-(P2 u P3)-free (3,3)^e witnesses.

``check_minimal_cop2p3_properties`` evaluates the five necessary
conditions on a candidate graph and attaches a concrete counterexample to
every failure.  ``min_degree_lower_bound`` reruns the degree-8 procedure:
for each triangle-free graph whose cone stays co-(P2 u P3)-free, every
2-edge-coloring is tested for extendability by an apex vertex without a
monochromatic triangle; apex extendability is the (3,3)^e CNF machinery
with the interior coloring fixed as unit clauses.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .canon import aut_generators, canon_key, group_elements
from .constructions import cone
from .genfree import GenFilter, generate_free_graphs
from .graph6 import encode_graph6
from .graphs import Graph, bits, edge_triangle_counts
from .patterns import clique, co_p2p3, contains_pattern
from .sat import encode_cnf_33, solve_cnf


@dataclass
class PropertyReport:
    verdicts: dict[int, bool] = field(default_factory=dict)
    counterexamples: dict[int, tuple] = field(default_factory=dict)

    def passed(self) -> bool:
        return all(self.verdicts.values())

    def fail(self, item: int, witness: tuple) -> None:
        self.verdicts[item] = False
        self.counterexamples[item] = witness


def check_minimal_cop2p3_properties(g: Graph) -> PropertyReport:
    """The five necessary properties of a minimal witness.

    Passing is necessary only: it certifies neither minimality nor
    arrowing.  Raises when the input is not co-(P2 u P3)-free.
    """
    if contains_pattern(g, co_p2p3()):
        raise ValueError("input contains the complement of P2 u P3")
    rep = PropertyReport()
    n = g.n

    # 1: K4-free
    rep.verdicts[1] = True
    if contains_pattern(g, clique(4)):
        for quad in _find_k4(g):
            rep.fail(1, quad)
            break

    # 2: every edge in at least two triangles
    rep.verdicts[2] = True
    for (u, v), count in edge_triangle_counts(g).items():
        if count < 2:
            rep.fail(2, (u, v, count))
            break

    # 3: neighborhoods K3-free and C4-free
    rep.verdicts[3] = True
    for u in range(n):
        nb = g.induced(g.neighbors(u))
        if contains_pattern(nb, clique(3)):
            rep.fail(3, (u, "K3 in neighborhood"))
            break
        from .patterns import cycle4
        if contains_pattern(nb, cycle4()):
            rep.fail(3, (u, "C4 in neighborhood"))
            break

    # 4: a distinct outside apex for every neighborhood edge
    rep.verdicts[4] = True
    for u in range(n):
        nbmask = g.adj[u]
        outside = ((1 << n) - 1) & ~nbmask & ~(1 << u)
        apexes: dict[tuple[int, int], int] = {}
        ok = True
        for x in bits(nbmask):
            for y in bits(nbmask & g.adj[x]):
                if y <= x:
                    continue
                cands = g.adj[x] & g.adj[y] & outside
                if cands == 0:
                    rep.fail(4, (u, (x, y), "no outside apex"))
                    ok = False
                    break
                apexes[(x, y)] = cands
            if not ok:
                break
        if not ok:
            break
        # apexes for different edges must be distinct: candidate sets are
        # pairwise disjoint in a co-(P2 u P3)-free graph
        items = list(apexes.items())
        for i in range(len(items)):
            for j in range(i + 1, len(items)):
                if items[i][1] & items[j][1]:
                    rep.fail(4, (u, items[i][0], items[j][0],
                                 "shared apex candidate"))
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break

    # 5: minimum degree 8
    rep.verdicts[5] = True
    for v in range(n):
        if g.degree(v) < 8:
            rep.fail(5, (v, g.degree(v)))
            break
    return rep


def _find_k4(g: Graph):
    for a in range(g.n):
        for b in bits(g.adj[a] & ~((2 << a) - 1)):
            common_ab = g.adj[a] & g.adj[b]
            for c in bits(common_ab & ~((2 << b) - 1)):
                for d in bits(common_ab & g.adj[c] & ~((2 << c) - 1)):
                    yield (a, b, c, d)


def edge_multiplicity_equivalence(g: Graph) -> bool:
    """Item 2 two ways: 'every edge in >= 2 triangles' iff 'every vertex of
    every induced neighborhood has degree >= 2 there'."""
    by_edges = all(c >= 2 for c in edge_triangle_counts(g).values())
    by_neighborhoods = True
    for u in range(g.n):
        nb = g.neighbors(u)
        ind = g.induced(nb)
        if any(ind.degree(i) < 2 for i in range(ind.n)):
            by_neighborhoods = False
            break
    if not g.edge_count:
        return True
    return by_edges == by_neighborhoods


@dataclass
class ExtendabilityRecord:
    order: int
    graphs_considered: int
    colorings_checked: int
    all_extendable: bool
    witness_graph6: Optional[str] = None
    witness_coloring: Optional[tuple[int, ...]] = None
    non_extendable_graphs: list[str] = field(default_factory=list)


def _apex_extendable(h: Graph, coloring: dict[tuple[int, int], int]) -> bool:
    """Can apex edges be 2-colored with no monochromatic triangle?

    Builds the (3,3)^e formula of cone(h) and fixes the interior edges as
    unit assumptions; h is triangle-free so only apex triangles remain.
    """
    coned = cone(h)
    f = encode_cnf_33(coned)
    assumptions = []
    for (u, v), c in coloring.items():
        var = f.edge_index[(u, v)]
        assumptions.append(var if c == 0 else -var)
    return solve_cnf(f, assumptions=tuple(assumptions)) is not None


def _edge_orbit_reps(h: Graph, cap: int = 100000):
    """Coloring dedupe helper: all automorphisms as edge permutations,
    or None when the group is too large to enumerate."""
    gens = aut_generators(h)
    if not gens:
        return None
    elems = group_elements(h.n, gens, cap=cap)
    if elems is None or len(elems) <= 1:
        return None
    edges = h.edges()
    index = {e: i for i, e in enumerate(edges)}
    perms = []
    for sigma in elems:
        perm = [0] * len(edges)
        for i, (u, v) in enumerate(edges):
            a, b = sigma[u], sigma[v]
            perm[i] = index[(a, b) if a < b else (b, a)]
        perms.append(tuple(perm))
    return perms


def min_degree_lower_bound(n_max: int, reduce_symmetry: bool = True
                           ) -> list[ExtendabilityRecord]:
    """The degree-8 procedure, for each order up to n_max (<= 9)."""
    if n_max > 9:
        raise ValueError("procedure documented for n <= 9 only")
    records = []
    cop = co_p2p3()
    for n in range(1, n_max + 1):
        considered = 0
        colorings_checked = 0
        all_ext = True
        witness_g6 = None
        witness_col = None
        bad_graphs = []
        for h in generate_free_graphs(GenFilter(n, clique(3))):
            if contains_pattern(cone(h), cop):
                continue
            considered += 1
            edges = h.edges()
            m = len(edges)
            edge_perms = _edge_orbit_reps(h) if reduce_symmetry else None
            seen_colorings: set[int] = set()
            graph_bad = False
            for mask in range(1 << m):
                if edge_perms is not None:
                    canon_mask = mask
                    for perm in edge_perms:
                        img = 0
                        for i in range(m):
                            if (mask >> i) & 1:
                                img |= 1 << perm[i]
                        if img < canon_mask:
                            canon_mask = img
                    if canon_mask in seen_colorings:
                        continue
                    seen_colorings.add(canon_mask)
                colorings_checked += 1
                coloring = {e: (mask >> i) & 1 for i, e in enumerate(edges)}
                if not _apex_extendable(h, coloring):
                    all_ext = False
                    graph_bad = True
                    if witness_g6 is None:
                        witness_g6 = encode_graph6(h)
                        witness_col = tuple((mask >> i) & 1 for i in range(m))
            if graph_bad:
                bad_graphs.append(canon_key(h))
        records.append(ExtendabilityRecord(
            n, considered, colorings_checked, all_ext,
            witness_g6, witness_col, sorted(bad_graphs)))
    return records


def brute_force_apex_extendable(h: Graph, coloring_mask: int) -> bool:
    """Independent re-check: enumerate all 2^n apex-edge colorings."""
    edges = h.edges()
    color = {e: (coloring_mask >> i) & 1 for i, e in enumerate(edges)}
    n = h.n
    for apex_mask in range(1 << n):
        good = True
        for (u, v), c in color.items():
            if ((apex_mask >> u) & 1) == c and ((apex_mask >> v) & 1) == c:
                good = False
                break
        if good:
            return True
    return False


def subdivided_k4() -> Graph:
    """K4 with the edges of one 4-cycle each subdivided by a vertex."""
    # K4 on 0..3 with 4-cycle 0-1-2-3; subdivision vertices 4..7
    edges = [(0, 2), (1, 3)]
    cyc = [(0, 1), (1, 2), (2, 3), (3, 0)]
    for i, (a, b) in enumerate(cyc):
        s = 4 + i
        edges.append((a, s))
        edges.append((s, b))
    return Graph.from_edges(8, edges)
