"""Exact invariants: clique number, independence number, chromatic number.

Clique search is branch-and-bound over bitset candidate sets with a greedy
coloring upper bound.  Chromatic number iterates k-colorability from
max(clique bound, ceil(n / independence)) upward; the k-colorability test
is DSATUR-ordered backtracking with symmetric-color pruning.  Intended for
desk scale (n <= 70 or so); the order cap of the Graph type still applies.
"""

from __future__ import annotations

from .graphs import Graph, bits


def _greedy_color_bound(adj: tuple[int, ...], mask: int) -> list[tuple[int, int]]:
    """Greedy coloring of the subgraph on ``mask``.

    Returns vertices paired with color numbers in a branching-friendly
    order (highest color last), giving per-vertex upper bounds for the
    clique branch-and-bound.
    """
    order: list[tuple[int, int]] = []
    color = 0
    remaining = mask
    while remaining:
        color += 1
        avail = remaining
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            order.append((v, color))
            avail &= ~adj[v]
            avail ^= low
            remaining ^= low
    return order


def max_clique(g: Graph) -> list[int]:
    """One maximum clique (vertex list)."""
    adj = g.adj
    best: list[int] = []

    def expand(mask: int, current: list[int]) -> None:
        nonlocal best
        order = _greedy_color_bound(adj, mask)
        prefix = [0] * (len(order) + 1)
        for i, (v, _) in enumerate(order):
            prefix[i + 1] = prefix[i] | (1 << v)
        for i in range(len(order) - 1, -1, -1):
            v, c = order[i]
            if len(current) + c <= len(best):
                return
            current.append(v)
            newmask = adj[v] & prefix[i]
            if newmask:
                expand(newmask, current)
            elif len(current) > len(best):
                best = list(current)
            current.pop()

    full = (1 << g.n) - 1
    expand(full, [])
    return best


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    return clique_number(g.complement())


def max_independent_set(g: Graph) -> list[int]:
    return max_clique(g.complement())


def _k_colorable(g: Graph, k: int) -> list[int] | None:
    """A proper k-coloring as a color list, or None.

    DSATUR-ordered backtracking; a fresh color may only be opened one past
    the highest color used so far (symmetric colors are interchangeable).
    """
    n = g.n
    adj = g.adj
    colors = [-1] * n
    neighbor_colors = [0] * n  # bitmask of colors adjacent to v

    def pick() -> int:
        bestv = -1
        key = (-1, -1)
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = neighbor_colors[v].bit_count()
            deg = adj[v].bit_count()
            if (sat, deg) > key:
                key = (sat, deg)
                bestv = v
        return bestv

    def assign(v: int, used: int) -> bool:
        limit = min(k, used + 1)
        for c in range(limit):
            if (neighbor_colors[v] >> c) & 1:
                continue
            colors[v] = c
            touched = []
            for u in bits(adj[v]):
                if colors[u] < 0 and not (neighbor_colors[u] >> c) & 1:
                    neighbor_colors[u] |= 1 << c
                    touched.append(u)
            nxt = pick()
            if nxt < 0:
                return True
            if assign(nxt, max(used, c + 1)):
                return True
            colors[v] = -1
            for u in touched:
                neighbor_colors[u] &= ~(1 << c)
        return False

    if n == 0:
        return []
    first = pick()
    if assign(first, 0):
        return list(colors)
    return None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number.

    Lower bounds: clique number and ceil(n / independence number); the
    latter is what makes dense vertex-transitive instances tractable.
    """
    if g.edge_count == 0:
        return 1 if g.n else 0
    lo = clique_number(g)
    alpha = independence_number(g)
    lo = max(lo, -(-g.n // alpha))
    k = lo
    while True:
        if _k_colorable(g, k) is not None:
            return k
        k += 1


def proper_coloring(g: Graph, k: int) -> list[int] | None:
    """A proper k-coloring if one exists."""
    return _k_colorable(g, k)
