"""Recursive isomorph-free generation of locally linear graphs.

A graph is locally linear (LL) when every edge lies in exactly one
triangle.  Deleting a vertex together with the third edges of its
triangles keeps a graph LL, so every LL graph on n vertices arises from
one on n-1 by attaching a new vertex whose neighborhood is an even
independent set, matched into pairs with no common neighbors; the pair
edges complete the new triangles.  Isomorph rejection is canonical
deletion, like the exhaustive generator.

The C4-free variant additionally rejects any two candidate neighbors
with a common neighbor in the parent (they would close a 4-cycle through
the new vertex) and then re-checks 4-cycle-freeness locally on the
child: a new pair edge can also close a 4-cycle along a length-3 path,
which the distance-two test alone does not see.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import _canon_raw, accept_new_vertex
from .graph6 import encode_graph6
from .graphs import Graph, bits, edge_triangle_counts


@dataclass(frozen=True)
class LLTask:
    order: int
    c4free: bool = False
    maximal_only: bool = False

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")


def is_locally_linear(g: Graph) -> bool:
    """Every edge lies in exactly one triangle."""
    return all(c == 1 for c in edge_triangle_counts(g).values())


def _has_new_c4(rows: list[int], n: int, touched: list[int]) -> bool:
    """Any vertex pair with two common neighbors, restricted to pairs
    meeting ``touched`` (sufficient right after a local edit)."""
    for p in touched:
        rp = rows[p]
        for q in range(n):
            if q != p and (rp & rows[q]).bit_count() >= 2:
                return True
    return False


def _candidate_pairs(m: int, rows: tuple[int, ...], c4free: bool
                     ) -> list[tuple[int, int]]:
    """Pairs that may form a triangle with the new vertex: nonadjacent
    with no common neighbor.  In C4-free mode a pair joined by a path of
    length 3 is also rejected: its new edge would close a 4-cycle."""
    out = []
    for a in range(m):
        ra = rows[a]
        for b in range(a + 1, m):
            if (ra >> b) & 1:
                continue
            rb = rows[b]
            if ra & rb:
                continue
            if c4free:
                blocked = False
                y_rest = ra
                not_a = ~(1 << a)
                while y_rest:
                    low = y_rest & -y_rest
                    y = low.bit_length() - 1
                    y_rest ^= low
                    if rows[y] & rb & not_a:
                        blocked = True
                        break
                if blocked:
                    continue
            out.append((a, b))
    return out


def _ll_children(m: int, rows: tuple[int, ...], c4free: bool
                 ) -> Iterator[tuple[int, ...]]:
    """All augmentations: the new vertex plus a matching of parent pairs.

    The canonical-deletion acceptance downstream requires the new vertex
    (degree 2m for m pairs) to have weakly minimal degree in the child,
    which bounds m and forces every low-degree parent vertex into the
    neighborhood; both facts prune here, before children are built.
    """
    degs = [row.bit_count() for row in rows]
    mind = min(degs)
    # a vertex of degree < 2m-2 can never satisfy the minimal-degree rule
    m_cap = (mind + 2) // 2
    pairs = _candidate_pairs(m, rows, c4free)
    np_ = len(pairs)
    pair_mask = [(1 << a) | (1 << b) for a, b in pairs]
    # vertices whose degree is below 2k must all lie in the neighborhood
    need_mask = [0] * (m_cap + 1)
    for k in range(m_cap + 1):
        need_mask[k] = sum(1 << v for v in range(m) if degs[v] < 2 * k)
    # compatibility between chosen pairs: endpoint-disjoint, mutually
    # nonadjacent (independence of the neighborhood) and, for the C4-free
    # variant, no common neighbors across pairs either
    compat = [0] * np_
    for i in range(np_):
        a, b = pairs[i]
        for j in range(i + 1, np_):
            c, d = pairs[j]
            if pair_mask[i] & pair_mask[j]:
                continue
            if (rows[a] | rows[b]) & pair_mask[j]:
                continue
            if c4free and ((rows[a] & rows[c]) or (rows[a] & rows[d])
                           or (rows[b] & rows[c]) or (rows[b] & rows[d])):
                continue
            compat[i] |= 1 << j

    newbit = 1 << m

    def build(chosen: list[int], nbhd: int) -> tuple[int, ...]:
        out = list(rows)
        out.append(nbhd)
        rest = nbhd
        while rest:
            low = rest & -rest
            out[low.bit_length() - 1] |= newbit
            rest ^= low
        for i in chosen:
            a, b = pairs[i]
            out[a] |= 1 << b
            out[b] |= 1 << a
        return tuple(out)

    def rec(allowed: int, chosen: list[int], nbhd: int
            ) -> Iterator[tuple[int, ...]]:
        k = len(chosen)
        if need_mask[k] & ~nbhd == 0:
            yield build(chosen, nbhd)
        if k == m_cap:
            return
        rest = allowed
        while rest:
            low = rest & -rest
            i = low.bit_length() - 1
            rest ^= low
            chosen.append(i)
            yield from rec(allowed & compat[i] & ~((2 << i) - 1),
                           chosen, nbhd | pair_mask[i])
            chosen.pop()

    yield from rec((1 << np_) - 1, [], 0)


def is_mll(g: Graph, c4free: bool = False) -> bool:
    """No triangle can be added while staying LL (and C4-free if asked).

    An addable triple is pairwise nonadjacent with pairwise empty common
    neighborhoods; in C4-free mode the tentative addition must also keep
    the graph 4-cycle-free.
    """
    if not is_locally_linear(g):
        raise ValueError("is_mll needs a locally linear input")
    if c4free:
        from .patterns import contains_pattern, cycle4
        if contains_pattern(g, cycle4()):
            raise ValueError("is_mll(c4free=True) needs a C4-free input")
    n = g.n
    rows = g.adj
    for u in range(n):
        ru = rows[u]
        for v in range(u + 1, n):
            if (ru >> v) & 1 or (ru & rows[v]):
                continue
            for w in range(v + 1, n):
                if (ru >> w) & 1 or (rows[v] >> w) & 1:
                    continue
                if (ru & rows[w]) or (rows[v] & rows[w]):
                    continue
                if c4free:
                    tmp = list(rows)
                    for x, y in ((u, v), (u, w), (v, w)):
                        tmp[x] |= 1 << y
                        tmp[y] |= 1 << x
                    if _has_new_c4(tmp, n, [u, v, w]):
                        continue
                return False
    return True


def generate_ll(task: LLTask, split: tuple[int, int, int] | None = None,
                maximality_first: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of LL graphs on
    task.order vertices (C4-free ones when task.c4free).

    ``maximality_first`` applies the (cheaper) maximality filter before
    the canonicity test on the last level; results are identical, it only
    reorders work, and it stays off by default for auditability.
    """
    for n, g in _ll_stream(task.order, task.c4free, split):
        if n != task.order:
            continue
        if task.maximal_only:
            if maximality_first:
                pass  # filtering happened in the stream already
            if not is_mll(g, task.c4free):
                continue
        yield g


def _ll_stream(max_n: int, c4free: bool,
               split: tuple[int, int, int] | None = None
               ) -> Iterator[tuple[int, Graph]]:
    """DFS over the augmentation tree, yielding every visited (order, graph)."""
    if split is not None:
        depth, part, of = split
        if not (1 <= depth <= max_n and 0 <= part < of):
            raise ValueError("bad split specification")
    counter = [0]

    def extend(m: int, rows: tuple[int, ...]) -> Iterator[tuple[int, Graph]]:
        yield m, Graph(m, rows)
        if m == max_n:
            return
        seen: set[str] = set()
        for child in _ll_children(m, rows, c4free):
            ok, labeling = accept_new_vertex(m + 1, child, m)
            if not ok:
                continue
            if labeling is None:
                labeling, _ = _canon_raw(m + 1, child)
            key = encode_graph6(Graph(m + 1, child).relabel(labeling))
            if key in seen:
                continue
            seen.add(key)
            if split is not None and m + 1 == split[0]:
                idx = counter[0]
                counter[0] += 1
                if idx % split[2] != split[1]:
                    continue
            yield from extend(m + 1, child)

    yield from extend(1, (0,))


def ll_census(max_n: int, c4free: bool = False,
              with_maximal: bool = True) -> dict[int, tuple[int, int]]:
    """Counts per order from one traversal: {n: (graphs, maximal graphs)}."""
    counts = {n: [0, 0] for n in range(1, max_n + 1)}
    for n, g in _ll_stream(max_n, c4free):
        counts[n][0] += 1
        if with_maximal and is_mll(g, c4free):
            counts[n][1] += 1
    return {n: (a, b) for n, (a, b) in counts.items()}
