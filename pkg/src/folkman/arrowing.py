"""Vertex arrowing decisions.

``arrows_vertex`` decides G -> (a_1,...,a_k)^v by coloring vertices one by
one in a breadth-first order started at a maximum-degree vertex, so early
prefixes are dense and forbidden cliques show up fast.  Assigning color i
to v is refused when v closes a K_{a_i} inside color class i.  For the
two-color (3,3) case a forward-checking cascade runs: once v and a
neighbor w share a color and {v,w,z} is a triangle with z uncolored, z is
forced to the other color immediately.

``brute_force_arrows`` enumerates every coloring and is the ground-truth
oracle for small instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Coloring, Graph, bits


class InstanceTooLarge(ValueError):
    """Brute-force enumeration would exceed the documented budget."""


@dataclass(frozen=True)
class ArrowSpec:
    """Targets (a_1..a_k) plus mode; a_i = 1 entries are normalized away."""

    targets: tuple[int, ...]
    mode: str = "vertex"
    dropped_ones: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        if self.mode not in ("vertex", "edge"):
            raise ValueError(f"bad arrowing mode {self.mode!r}")
        if not self.targets or any(a < 1 for a in self.targets):
            raise ValueError("targets must be positive integers")
        if self.mode == "edge" and tuple(self.targets) != (3, 3):
            raise ValueError("edge arrowing supports targets (3,3) only")

    @staticmethod
    def vertex(*targets: int) -> "ArrowSpec":
        return ArrowSpec(tuple(targets), "vertex").normalized()

    @staticmethod
    def edge33() -> "ArrowSpec":
        return ArrowSpec((3, 3), "edge")

    def normalized(self) -> "ArrowSpec":
        """Drop a_i = 1 entries (a K_1 exists under any coloring)."""
        kept = tuple(a for a in self.targets if a > 1)
        dropped = len(self.targets) - len(kept)
        if dropped == 0:
            return self
        return ArrowSpec(kept if kept else (1,), self.mode, dropped_ones=dropped)

    def __str__(self) -> str:
        return f"({','.join(map(str, self.targets))})^{self.mode[0]}"


def parse_arrow_spec(text: str) -> ArrowSpec:
    """Parse 'v:3,3' / 'e:3,3' / '3,3' (vertex default)."""
    t = text.strip().lower()
    mode = "vertex"
    if ":" in t:
        m, t = t.split(":", 1)
        if m == "e":
            mode = "edge"
        elif m != "v":
            raise ValueError(f"bad arrowing mode prefix {m!r}")
    targets = tuple(int(x) for x in t.split(","))
    return ArrowSpec(targets, mode)


def bfs_vertex_order(g: Graph) -> list[int]:
    """BFS from a maximum-degree vertex, ties by smallest index."""
    degs = g.degrees()
    seen = [False] * g.n
    order: list[int] = []
    while len(order) < g.n:
        start = min((v for v in range(g.n) if not seen[v]),
                    key=lambda v: (-degs[v], v))
        queue = [start]
        seen[start] = True
        while queue:
            v = queue.pop(0)
            order.append(v)
            nxt = sorted((u for u in bits(g.adj[v]) if not seen[u]),
                         key=lambda u: (-degs[u], u))
            for u in nxt:
                seen[u] = True
                queue.append(u)
    return order


def _closes_clique(adj: tuple[int, ...], inside: int, size: int) -> bool:
    """Is there a ``size``-clique within the vertex set ``inside``?"""
    if size <= 0:
        return True
    if size == 1:
        return inside != 0
    m = inside
    while m:
        low = m & -m
        v = low.bit_length() - 1
        m ^= low
        if _closes_clique(adj, adj[v] & m, size - 1):
            return True
    return False


def arrows_vertex(g: Graph, spec: ArrowSpec) -> tuple[bool, Coloring | None]:
    """Decide vertex arrowing; on False also return one good coloring."""
    if spec.mode != "vertex":
        raise ValueError("arrows_vertex needs a vertex-mode spec")
    spec = spec.normalized()
    targets = spec.targets
    if targets == (1,):
        return True, None  # a K_1 appears in every coloring
    k = len(targets)
    n = g.n
    adj = g.adj
    order = bfs_vertex_order(g)

    colors = [-1] * n
    class_mask = [0] * k
    # symmetric colors: among equal targets only the first unused is tried
    group_ids: dict[int, int] = {}
    group_of_color: list[int] = []
    for a in targets:
        group_ids.setdefault(a, len(group_ids))
        group_of_color.append(group_ids[a])

    forward = (k == 2 and targets == (3, 3))

    def feasible(v: int, ci: int) -> bool:
        a = targets[ci]
        inside = adj[v] & class_mask[ci]
        if a == 2:
            return inside == 0
        return not _closes_clique(adj, inside, a - 1)

    def place(v: int, ci: int, trail: list[tuple[int, int]]) -> bool:
        """Assign and (for (3,3)) cascade forced vertices; False on dead end."""
        stack = [(v, ci)]
        while stack:
            w, cw = stack.pop()
            if colors[w] >= 0:
                if colors[w] != cw:
                    return False
                continue
            if not feasible(w, cw):
                return False
            colors[w] = cw
            class_mask[cw] |= 1 << w
            trail.append((w, cw))
            if forward:
                other = 1 - cw
                same = adj[w] & class_mask[cw]
                for u in bits(same):
                    third = adj[w] & adj[u]
                    for z in bits(third):
                        if colors[z] < 0:
                            stack.append((z, other))
        return True

    def undo(trail: list[tuple[int, int]]) -> None:
        for w, cw in trail:
            colors[w] = -1
            class_mask[cw] &= ~(1 << w)

    pos = 0

    def next_uncolored(start: int) -> int:
        i = start
        while i < n and colors[order[i]] >= 0:
            i += 1
        return i

    def search(idx: int) -> bool:
        """True iff a complete good coloring exists from this state."""
        idx = next_uncolored(idx)
        if idx == n:
            return True
        v = order[idx]
        tried_empty_group: set[int] = set()
        for ci in range(k):
            # symmetry: within a group of equal targets, try only the
            # first currently-unused color plus every used one
            gid = group_of_color[ci]
            if class_mask[ci] == 0:
                if gid in tried_empty_group:
                    continue
                tried_empty_group.add(gid)
            trail: list[tuple[int, int]] = []
            if place(v, ci, trail):
                if search(idx + 1):
                    return True
            undo(trail)
        return False

    ok = search(0)
    if ok:
        coloring = Coloring("vertex", tuple(colors))
        assert _verify_vertex_coloring(g, spec, coloring)
        return False, coloring
    return True, None


def _verify_vertex_coloring(g: Graph, spec: ArrowSpec, coloring: Coloring) -> bool:
    """No color class i contains a K_{a_i}."""
    for i, a in enumerate(spec.targets):
        mask = 0
        for v, c in enumerate(coloring.assignment):
            if c == i:
                mask |= 1 << v
        if _closes_clique(g.adj, mask, a):
            return False
    return True


def brute_force_arrows(g: Graph, spec: ArrowSpec,
                       budget: int = 10 ** 8) -> bool:
    """Exhaustive enumeration of all colorings (the test oracle)."""
    spec2 = spec.normalized()
    if spec2.mode == "vertex":
        targets = spec2.targets
        if targets == (1,):
            return True
        k = len(targets)
        if k ** g.n > budget:
            raise InstanceTooLarge(f"{k}^{g.n} colorings exceed budget")
        n = g.n
        assignment = [0] * n

        def rec(v: int) -> bool:
            """True iff some completion is a good coloring."""
            if v == n:
                return True
            for c in range(k):
                assignment[v] = c
                mask = 0
                for u in range(v + 1):
                    if assignment[u] == c:
                        mask |= 1 << u
                # only need cliques through v
                if not _closes_clique(g.adj, g.adj[v] & mask, targets[c] - 1):
                    if rec(v + 1):
                        return True
            return False

        return not rec(0)

    # edge mode, targets (3,3)
    edges = g.edges()
    m = len(edges)
    if 2 ** m > budget:
        raise InstanceTooLarge(f"2^{m} edge colorings exceed budget")
    tri_masks = []
    index = {e: i for i, e in enumerate(edges)}
    from .graphs import triangles as _tris
    for (a, b, c) in _tris(g):
        tri_masks.append((1 << index[(a, b)]) | (1 << index[(a, c)])
                         | (1 << index[(b, c)]))
    if not tri_masks:
        return False
    for coloring in range(1 << m):
        good = True
        for t in tri_masks:
            x = coloring & t
            if x == t or x == 0:
                good = False
                break
        if good:
            return False
    return True
