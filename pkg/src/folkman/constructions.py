"""Deterministic graph constructions and witness transformations.

Cone, circulants, the 63-vertex polarity graph over GF(8), k-extensions
of a base graph, and greedy witness minimization.  A few named graphs
(Petersen, icosahedron, Mycielskian) live here too since fixtures and
tests build on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .arrowing import ArrowSpec, arrows_vertex
from .canon import canon_key, vertex_orbits
from .graphs import Graph, bits
from .invariants import max_independent_set
from .patterns import Pattern, contains_pattern
from .sat import arrows_edge_33


class InfeasibleSearch(ValueError):
    """The requested enumeration is beyond the documented feasible size."""


def cone(g: Graph) -> Graph:
    """g plus one universal vertex (the new vertex gets index g.n)."""
    full = (1 << g.n) - 1
    rows = [row | (1 << g.n) for row in g.adj]
    rows.append(full)
    return Graph(g.n + 1, tuple(rows))


def circulant(n: int, distances) -> Graph:
    dset = set(distances)
    if any(d < 1 or d > n // 2 for d in dset):
        raise ValueError(f"distances must lie in 1..{n // 2}")
    rows = [0] * n
    for i in range(n):
        for d in dset:
            rows[i] |= 1 << ((i + d) % n)
            rows[i] |= 1 << ((i - d) % n)
    return Graph(n, tuple(rows))


# -- GF(8) and the polarity graph ----------------------------------------

GF8_MODULUS = 0b1011  # x^3 + x + 1


def gf8_mul(a: int, b: int) -> int:
    """Carry-less multiply mod x^3 + x + 1."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & 0b1000:
            a ^= GF8_MODULUS
    return r


def gf8_add(a: int, b: int) -> int:
    return a ^ b


def polarity_graph_64() -> Graph:
    """The 63-vertex polarity graph over GF(8).

    Vertices are the nonzero pairs (x, y) in GF(8)^2, ordered by 8x+y;
    (x1,y1) ~ (x2,y2) iff the 2x2 determinant x1*y2 - x2*y1 equals 1
    (characteristic 2, so minus is plus).
    """
    pts = [(x, y) for x in range(8) for y in range(8) if (x, y) != (0, 0)]
    n = len(pts)
    rows = [0] * n
    for i, (x1, y1) in enumerate(pts):
        for j in range(i + 1, n):
            x2, y2 = pts[j]
            if gf8_mul(x1, y2) ^ gf8_mul(x2, y1) == 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# -- named small graphs ----------------------------------------------------

def petersen() -> Graph:
    """Kneser graph on the 2-subsets of a 5-set (disjointness adjacency)."""
    pairs = list(combinations(range(5), 2))
    edges = [(i, j) for i in range(10) for j in range(i + 1, 10)
             if not set(pairs[i]) & set(pairs[j])]
    return Graph.from_edges(10, edges)


def icosahedron() -> Graph:
    """The icosahedron: 12 vertices, 5-regular, every neighborhood a C5."""
    top, bottom = 0, 11
    upper = [1, 2, 3, 4, 5]
    lower = [6, 7, 8, 9, 10]
    edges = [(top, u) for u in upper] + [(bottom, v) for v in lower]
    for i in range(5):
        edges.append((upper[i], upper[(i + 1) % 5]))
        edges.append((lower[i], lower[(i + 1) % 5]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[(i + 1) % 5]))
    return Graph.from_edges(12, edges)


def mycielskian(g: Graph) -> Graph:
    """Mycielski construction (adds n shadow vertices plus an apex)."""
    n = g.n
    rows = [0] * (2 * n + 1)
    for u, v in g.edges():
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        rows[u] |= 1 << (n + v)
        rows[n + v] |= 1 << u
        rows[v] |= 1 << (n + u)
        rows[n + u] |= 1 << v
    apex = 2 * n
    for i in range(n, 2 * n):
        rows[i] |= 1 << apex
        rows[apex] |= 1 << i
    return Graph(2 * n + 1, tuple(rows))


def grotzsch() -> Graph:
    """Smallest triangle-free graph with chromatic number 4."""
    return mycielskian(Graph.cycle(5))


# -- k-extensions ----------------------------------------------------------

@dataclass(frozen=True)
class ExtensionTask:
    base: Graph
    k: int
    forbidden: Pattern | None = None
    independent_set_only: bool = False

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if self.base.n + self.k > 128:
            raise ValueError("extension exceeds the order cap")


def k_extensions(task: ExtensionTask):
    """One representative per isomorphism class of pattern-free graphs G
    with a set S of k vertices such that G - S is the base graph.

    Extension neighborhoods range over all subsets of the base and, unless
    S is restricted to an independent set, over edges among S as well.
    """
    m = task.base.n
    k = task.k
    free_bits = k * m + (0 if task.independent_set_only else k * (k - 1) // 2)
    if free_bits > 40:
        raise InfeasibleSearch(
            f"2^{free_bits} extension candidates; documented guidance is "
            "k <= 3 with base order <= 14")
    base_rows = list(task.base.adj)
    seen: set[str] = set()

    def emit_or_skip(rows: list[int]):
        g = Graph(m + k, tuple(rows))
        key = canon_key(g)
        if key in seen:
            return None
        seen.add(key)
        return g

    def rec(depth: int, rows: list[int], prev_nbhd: int):
        if depth == k:
            g = emit_or_skip(rows)
            if g is not None:
                yield g
            return
        vid = m + depth
        # with interchangeable extension vertices, force non-decreasing
        # neighborhoods to cut permuted duplicates early
        start = prev_nbhd if task.independent_set_only else 0
        for nbhd in range(start, 1 << m):
            new_rows = rows + [nbhd]
            for u in bits(nbhd):
                new_rows[u] = new_rows[u] | (1 << vid)
            if not task.independent_set_only and depth > 0:
                for prev_mask in range(1 << depth):
                    rows2 = [r for r in new_rows]
                    for pi in bits(prev_mask):
                        pv = m + pi
                        rows2[pv] |= 1 << vid
                        rows2[vid] |= 1 << pv
                    if task.forbidden is not None and _creates(
                            rows2, vid, task.forbidden):
                        continue
                    yield from rec(depth + 1, rows2, nbhd)
            else:
                if task.forbidden is not None and _creates(
                        new_rows, vid, task.forbidden):
                    continue
                yield from rec(depth + 1, new_rows, nbhd)

    yield from rec(0, base_rows, 0)


def _creates(rows: list[int], _newv: int, p: Pattern) -> bool:
    return contains_pattern(Graph(len(rows), tuple(rows)), p)


# -- witness minimization ---------------------------------------------------

@dataclass(frozen=True)
class MinimizeResult:
    graph: Graph
    removed: int
    edge_minimal: bool


def _arrows(g: Graph, spec: ArrowSpec, timeout: float | None) -> bool:
    if spec.mode == "vertex":
        return arrows_vertex(g, spec)[0]
    return arrows_edge_33(g, timeout=timeout)[0]


def minimize_witness(g: Graph, spec: ArrowSpec,
                     forbidden: Pattern | None = None,
                     remove_max_independent_first: bool = False,
                     timeout: float | None = 60.0) -> MinimizeResult:
    """Shrink an arrowing pattern-free witness until vertex-minimal.

    Deletion order is ascending degree (ties by index) over one vertex per
    automorphism orbit; optionally a maximum independent set is removed
    wholesale first.  The result still arrows, is pattern-free, and no
    single vertex deletion preserves arrowing; edge-minimality is reported
    alongside.
    """
    if forbidden is not None and contains_pattern(g, forbidden):
        raise ValueError("witness is not pattern-free")
    if not _arrows(g, spec, timeout):
        raise ValueError("graph does not arrow the spec")
    current = g
    if remove_max_independent_first and current.n > 1:
        ind = max_independent_set(current)
        if len(ind) < current.n:
            candidate = current.delete_vertices(ind)
            if candidate.n >= 1 and _arrows(candidate, spec, timeout):
                current = candidate
    improved = True
    while improved and current.n > 1:
        improved = False
        orbits = vertex_orbits(current)
        reps = [min(o) for o in orbits]
        reps.sort(key=lambda v: (current.degree(v), v))
        for v in reps:
            candidate = current.delete_vertex(v)
            if _arrows(candidate, spec, timeout):
                current = candidate
                improved = True
                break
    edge_minimal = True
    for (u, v) in current.edges():
        if _arrows(current.remove_edge(u, v), spec, timeout):
            edge_minimal = False
            break
    assert _arrows(current, spec, timeout)
    if forbidden is not None:
        assert not contains_pattern(current, forbidden)
    return MinimizeResult(current, g.n - current.n, edge_minimal)
