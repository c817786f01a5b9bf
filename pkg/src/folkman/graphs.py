"""Immutable bitset graphs.

Vertices are 0..n-1.  Each adjacency row is a Python int used as a bitset,
so neighborhood intersections, clique tests and subgraph checks are single
`&`/`bit_count` operations.  The order cap is 128: every witness graph in
scope fits well under it, and a hard cap keeps the serialization and the
search kernels honest.

Graphs are immutable values; every derived graph (complement, vertex
deletion, edge addition, relabeling) is a new object.  Hot search loops
operate on plain lists of row ints and wrap results in Graph only when a
graph is emitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 128


class GraphError(ValueError):
    """Raised for malformed graph data (asymmetry, loops, bad order)."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError("adjacency bits beyond declared order")
            if (row >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in _bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    # -- constructors -------------------------------------------------

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n)

    @staticmethod
    def complete(n: int) -> "Graph":
        full = (1 << n) - 1
        return Graph(n, tuple(full ^ (1 << v) for v in range(n)))

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @staticmethod
    def cycle(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @staticmethod
    def path(n: int) -> "Graph":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    # -- basic queries -------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for off in _bits(row):
                out.append((u, u + 1 + off))
        return out

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    # -- derived graphs ------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple((full ^ row) & ~(1 << v) & full
                                   for v, row in enumerate(self.adj)))

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.adj)
        for u, v in edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def remove_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, tuple(rows))

    def delete_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced(keep)

    def delete_vertex(self, v: int) -> "Graph":
        return self.delete_vertices([v])

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = list(vertices)
        index = {v: i for i, v in enumerate(keep)}
        rows = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in _bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    rows[i] |= 1 << j
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: list[int]) -> "Graph":
        """Relabel so that old vertex v becomes perm[v]."""
        rows = [0] * self.n
        for v, row in enumerate(self.adj):
            nv = perm[v]
            for u in _bits(row):
                rows[nv] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.adj)
        rows.extend(row << self.n for row in other.adj)
        return Graph(self.n + other.n, tuple(rows))

    # -- connectivity --------------------------------------------------

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def is_two_connected(self) -> bool:
        """Connected, at least 3 vertices, and no articulation vertex."""
        if self.n < 3 or not self.is_connected():
            return False
        return all(self.delete_vertex(v).is_connected() for v in range(self.n))


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles of g, each listed once, lexicographically sorted."""
    out = []
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(above_u):
            common = above_u & g.adj[v] >> (v + 1) << (v + 1)
            for w in _bits(common):
                out.append((u, v, w))
    return out


def triangle_count(g: Graph) -> int:
    total = 0
    for u in range(g.n):
        above_u = g.adj[u] >> (u + 1) << (u + 1)
        for v in _bits(above_u):
            total += (above_u & g.adj[v] >> (v + 1) << (v + 1)).bit_count()
    return total


def edge_triangle_counts(g: Graph) -> dict[tuple[int, int], int]:
    """Number of triangles through each edge (u,v), u < v."""
    counts = {}
    for u, v in g.edges():
        counts[(u, v)] = (g.adj[u] & g.adj[v]).bit_count()
    return counts


@dataclass(frozen=True)
class Coloring:
    """A total vertex or edge coloring of a subject graph.

    For vertex mode ``assignment[v]`` is the color of vertex v.  For edge
    mode the assignment is indexed by the position of the edge in
    ``graph.edges()`` order.
    """

    mode: str  # "vertex" | "edge"
    assignment: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.mode not in ("vertex", "edge"):
            raise ValueError(f"bad coloring mode {self.mode!r}")

    def color_classes(self, k: int | None = None) -> list[list[int]]:
        k = k if k is not None else (max(self.assignment) + 1 if self.assignment else 0)
        classes: list[list[int]] = [[] for _ in range(k)]
        for i, c in enumerate(self.assignment):
            classes[c].append(i)
        return classes


def bits(mask: int) -> Iterator[int]:
    """Public alias for iterating set bits (used across the package)."""
    return _bits(mask)


def all_pairs(n: int) -> Iterator[tuple[int, int]]:
    return combinations(range(n), 2)
