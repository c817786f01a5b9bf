"""Forbidden-subgraph patterns and containment tests.

Containment is subgraph containment, not induced: J4 is found inside K4.
The recurring patterns (cliques, J_k, C4, W5, co-(P2 u P3)) get bitset
fast paths; arbitrary small patterns fall back to a backtracking matcher
anchored on the highest-degree pattern vertex.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bits

_KINDS = ("clique", "jgraph", "cycle4", "wheel5", "co_p2p3", "custom")


@dataclass(frozen=True)
class Pattern:
    kind: str
    k: int = 0
    graph: Graph | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown pattern kind {self.kind!r}")
        if self.kind in ("clique", "jgraph") and self.k < 3:
            raise ValueError(f"{self.kind} patterns require k >= 3")
        if self.kind == "custom":
            if self.graph is None:
                raise ValueError("custom pattern needs a graph")
            if self.graph.n > 10:
                raise ValueError("custom pattern order must be <= 10")

    @property
    def order(self) -> int:
        if self.kind in ("clique", "jgraph"):
            return self.k
        if self.kind in ("cycle4",):
            return 4
        if self.kind in ("wheel5", "co_p2p3"):
            return 5
        assert self.graph is not None
        return self.graph.n

    def __str__(self) -> str:
        if self.kind == "clique":
            return f"K{self.k}"
        if self.kind == "jgraph":
            return f"J{self.k}"
        if self.kind == "cycle4":
            return "C4"
        if self.kind == "wheel5":
            return "W5"
        if self.kind == "co_p2p3":
            return "coP2P3"
        return f"custom({self.graph.n})"


def clique(k: int) -> Pattern:
    return Pattern("clique", k)


def jgraph(k: int) -> Pattern:
    return Pattern("jgraph", k)


def cycle4() -> Pattern:
    return Pattern("cycle4")


def wheel5() -> Pattern:
    return Pattern("wheel5")


def co_p2p3() -> Pattern:
    return Pattern("co_p2p3")


def custom(g: Graph) -> Pattern:
    return Pattern("custom", graph=g)


def parse_pattern(text: str) -> Pattern:
    """Parse 'K5', 'J4', 'C4', 'W5', 'coP2P3' (case-insensitive)."""
    t = text.strip()
    low = t.lower()
    if low in ("c4", "cycle4"):
        return cycle4()
    if low in ("w5", "wheel5"):
        return wheel5()
    if low in ("cop2p3", "co-p2p3", "co(p2p3)", "co-(p2up3)"):
        return co_p2p3()
    if t and t[0] in "KkJj" and t[1:].isdigit():
        k = int(t[1:])
        return clique(k) if t[0] in "Kk" else jgraph(k)
    raise ValueError(f"cannot parse pattern {text!r}")


def pattern_graph(p: Pattern) -> Graph:
    """The pattern as an explicit graph (for the generic matcher and tests)."""
    if p.kind == "clique":
        return Graph.complete(p.k)
    if p.kind == "jgraph":
        return Graph.complete(p.k).remove_edge(0, 1)
    if p.kind == "cycle4":
        return Graph.cycle(4)
    if p.kind == "wheel5":
        # hub 4 + C4 rim 0..3
        return Graph.cycle(4).disjoint_union(Graph.empty(1)).add_edges(
            [(4, i) for i in range(4)])
    if p.kind == "co_p2p3":
        # complement of P2 u P3 with P2 = {0,1}, P3 = 2-3-4
        return Graph.complete(5).remove_edge(0, 1).remove_edge(2, 3).remove_edge(3, 4)
    assert p.graph is not None
    return p.graph


# -- fast paths ---------------------------------------------------------

def _has_clique_mask(adj: tuple[int, ...], mask: int, k: int) -> bool:
    """Is there a k-clique inside the vertex set ``mask``?"""
    if k == 0:
        return True
    if mask.bit_count() < k:
        return False
    if k == 1:
        return True
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        # only look at later vertices to avoid revisiting subsets
        if _has_clique_mask(adj, adj[v] & m, k - 1):
            return True
        if m.bit_count() < k:
            return False
    return False


def has_clique(g: Graph, k: int) -> bool:
    if k <= 0:
        return True
    if k == 1:
        return g.n >= 1
    if k == 2:
        return any(row for row in g.adj)
    return _has_clique_mask(g.adj, (1 << g.n) - 1, k)


def _cliques_with_common(adj, mask: int, size: int, common: int, out_need: int) -> bool:
    """Is there a ``size``-clique in ``mask`` whose common neighborhood
    (intersected with ``common``) has at least ``out_need`` vertices outside
    the clique?  Clique vertices never count: they are excluded from
    ``common`` as they are picked (a vertex is not its own neighbor)."""
    if size == 0:
        return common.bit_count() >= out_need
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if _cliques_with_common(adj, adj[v] & m, size - 1, common & adj[v], out_need):
            return True
    return False


def contains_pattern(g: Graph, p: Pattern) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to p."""
    if p.order > g.n:
        return False
    adj = g.adj
    if p.kind == "clique":
        return has_clique(g, p.k)
    if p.kind == "jgraph":
        # J_k = (k-2)-clique completely joined to two further vertices
        full = (1 << g.n) - 1
        return _cliques_with_common(adj, full, p.k - 2, full, 2)
    if p.kind == "cycle4":
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if (adj[u] & adj[v]).bit_count() >= 2:
                    return True
        return False
    if p.kind == "wheel5":
        # hub h with a C4 among its neighbors
        for h in range(g.n):
            nb = adj[h]
            for u in bits(nb):
                for v in bits(nb & ~((2 << u) - 1)):
                    if (adj[u] & adj[v] & nb).bit_count() >= 2:
                        return True
        return False
    if p.kind == "co_p2p3":
        # two vertices with >= 3 common neighbors, an edge among them
        for u in range(g.n):
            for v in range(u + 1, g.n):
                common = adj[u] & adj[v]
                if common.bit_count() < 3:
                    continue
                for a in bits(common):
                    if adj[a] & common & ~((2 << a) - 1):
                        return True
        return False
    assert p.graph is not None
    return subgraph_matches(g, p.graph)


def creates_pattern(adj: list[int] | tuple[int, ...], nbhd: int,
                    p: Pattern) -> bool:
    """Would adding a new vertex with neighborhood mask ``nbhd`` create
    ``p`` through the new vertex?

    ``adj`` is the adjacency of the graph *before* the addition.  Used by
    the generators to cut branches without building the child graph.
    """
    m = len(adj)
    if p.kind == "clique":
        return _has_clique_mask(adj, nbhd, p.k - 1)
    if p.kind == "jgraph":
        k = p.k
        full = (1 << m) - 1
        # new vertex as an outer vertex: (k-2)-clique in S with another
        # common neighbor anywhere
        if _cliques_with_common(adj, nbhd, k - 2, full, 1):
            return True
        # new vertex inside the clique: (k-3)-clique in S with two common
        # neighbors inside S
        return _cliques_with_common(adj, nbhd, k - 3, nbhd, 2)
    if p.kind == "cycle4":
        rest = nbhd
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            for y in bits(rest):
                if adj[x] & adj[y]:
                    return True
        return False
    if p.kind == "wheel5":
        # new vertex as hub: C4 among S
        rest = nbhd
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            rest ^= low
            for y in bits(rest):
                if (adj[x] & adj[y] & nbhd).bit_count() >= 2:
                    return True
        # new vertex on the rim: hub h in S, rim neighbors in S cap N(h)
        for h in bits(nbhd):
            ring = nbhd & adj[h]
            rest = ring
            while rest:
                low = rest & -rest
                x = low.bit_length() - 1
                rest ^= low
                for y in bits(rest):
                    if adj[x] & adj[y] & adj[h]:
                        return True
        return False
    if p.kind == "co_p2p3":
        # new vertex as an outer: other outer u, middles in S cap N(u)
        for u in range(m):
            t = nbhd & adj[u]
            if t.bit_count() >= 3:
                for a in bits(t):
                    if adj[a] & t & ~((2 << a) - 1):
                        return True
        # new vertex as a middle: outers u1,u2 in S
        rest = nbhd
        while rest:
            low = rest & -rest
            u1 = low.bit_length() - 1
            rest ^= low
            for u2 in bits(rest):
                c = adj[u1] & adj[u2]
                if c.bit_count() < 2:
                    continue
                if c & nbhd:
                    return True
                for a in bits(c):
                    if adj[a] & c & ~((2 << a) - 1):
                        return True
        return False
    # custom: build the child and run the generic matcher
    newbit = 1 << m
    rows = [row | newbit if (nbhd >> v) & 1 else row for v, row in enumerate(adj)]
    rows.append(nbhd)
    return contains_pattern(Graph(m + 1, tuple(rows)), p)


def subgraph_matches(g: Graph, h: Graph) -> bool:
    """Backtracking subgraph (not induced) matcher for small h.

    Anchors on the highest-degree pattern vertex; candidates are filtered
    by degree; ties broken by smallest index for determinism.
    """
    if h.n > g.n:
        return False
    hdeg = h.degrees()
    order = sorted(range(h.n), key=lambda v: (-hdeg[v], v))
    # place pattern vertices one by one, preferring already-constrained ones
    placed: list[int] = []
    remaining = set(order)
    seq: list[int] = []
    while remaining:
        best = None
        best_key = None
        for v in remaining:
            anchored = sum(1 for u in placed if h.has_edge(u, v))
            key = (-anchored, -hdeg[v], v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        seq.append(best)
        placed.append(best)
        remaining.discard(best)

    gdeg = g.degrees()
    assign: dict[int, int] = {}
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == len(seq):
            return True
        pv = seq[i]
        cands = (1 << g.n) - 1
        for u in seq[:i]:
            if h.has_edge(u, pv):
                cands &= g.adj[assign[u]]
        cands &= ~used
        for cv in bits(cands):
            if gdeg[cv] < hdeg[pv]:
                continue
            assign[pv] = cv
            used |= 1 << cv
            if extend(i + 1):
                return True
            used &= ~(1 << cv)
            del assign[pv]
        return False

    return extend(0)
