"""Canonical labeling, automorphisms and vertex orbits.

Individualization-refinement search over ordered partitions: cells are
refined to an equitable partition by neighbor counts, the first smallest
non-singleton cell is branched on, and discovered automorphisms prune
sibling branches (two candidates in one orbit of the stabilizer of the
current branching prefix yield identical subtrees).  The canonical
labeling is the leaf with the maximal relabeled-adjacency certificate;
automorphisms are read off pairs of leaves with equal certificates.

Group order is computed from the discovered generators by a plain
Schreier-Sims stabilizer chain, so it is exact even for large groups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph6 import encode_graph6
from .graphs import Graph, bits


def _refine(n: int, adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition to equitability.  Deterministic."""
    work: list[list[int]] = list(cells)
    while work:
        splitter = work.pop()
        if not splitter:
            continue
        wmask = 0
        for v in splitter:
            wmask |= 1 << v
        newcells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                newcells.append(cell)
                continue
            buckets: dict[int, list[int]] = {}
            for v in cell:
                buckets.setdefault((adj[v] & wmask).bit_count(), []).append(v)
            if len(buckets) == 1:
                newcells.append(cell)
                continue
            changed = True
            parts = [buckets[c] for c in sorted(buckets)]
            newcells.extend(parts)
            # worklist maintenance: replace a queued split cell by its parts,
            # otherwise queue all but one largest part
            replaced = False
            for wi, w in enumerate(work):
                if w is cell:
                    work[wi:wi + 1] = parts
                    replaced = True
                    break
            if not replaced:
                largest = max(range(len(parts)), key=lambda i: len(parts[i]))
                work.extend(p for i, p in enumerate(parts) if i != largest)
        if changed:
            cells = newcells
    return cells


def _certificate(n: int, adj: tuple[int, ...], perm: list[int]) -> tuple[int, ...]:
    """Adjacency rows of the graph relabeled so position i holds perm[i]."""
    pos = [0] * n
    for i, v in enumerate(perm):
        pos[v] = i
    rows = []
    for v in perm:
        r = 0
        m = adj[v]
        while m:
            low = m & -m
            r |= 1 << pos[low.bit_length() - 1]
            m ^= low
        rows.append(r)
    return tuple(rows)


def _compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(g[h[v]] for v in range(len(g)))


def _inverse(g: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(g)
    for v, w in enumerate(g):
        inv[w] = v
    return tuple(inv)


def _orbit_of(v: int, gens: list[tuple[int, ...]]) -> set[int]:
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


def _search(n: int, adj: tuple[int, ...]) -> tuple[list[int], list[tuple[int, ...]]]:
    """Return (canonical perm position->vertex, automorphism generators)."""
    cells = _refine(n, adj, [list(range(n))])
    best_cert: tuple[int, ...] | None = None
    best_perm: list[int] | None = None
    first_cert: tuple[int, ...] | None = None
    first_perm: list[int] | None = None
    gens: list[tuple[int, ...]] = []

    def at_leaf(leaf_cells: list[list[int]]) -> None:
        nonlocal best_cert, best_perm, first_cert, first_perm
        perm = [c[0] for c in leaf_cells]
        cert = _certificate(n, adj, perm)
        if first_cert is None:
            first_cert, first_perm = cert, perm
            best_cert, best_perm = cert, perm
            return
        recorded = False
        if cert == first_cert and perm != first_perm:
            gens.append(_leaf_auto(n, first_perm, perm))
            recorded = True
        if cert > best_cert:
            best_cert, best_perm = cert, perm
        elif cert == best_cert and not recorded and perm != best_perm:
            gens.append(_leaf_auto(n, best_perm, perm))

    def descend(cur_cells: list[list[int]], prefix: list[int]) -> None:
        target_idx = -1
        target_size = n + 1
        for i, c in enumerate(cur_cells):
            lc = len(c)
            if 1 < lc < target_size:
                target_idx, target_size = i, lc
        if target_idx < 0:
            at_leaf(cur_cells)
            return
        target = cur_cells[target_idx]
        processed: list[int] = []
        for v in target:
            if processed:
                applicable = [g for g in gens
                              if all(g[x] == x for x in prefix)]
                if applicable:
                    reach = _orbit_of(v, applicable)
                    if any(u in reach for u in processed):
                        processed.append(v)
                        continue
            rest = [u for u in target if u != v]
            child = (cur_cells[:target_idx] + [[v], rest]
                     + cur_cells[target_idx + 1:])
            child = _refine(n, adj, child)
            prefix.append(v)
            descend(child, prefix)
            prefix.pop()
            processed.append(v)

    descend(cells, [])
    assert best_perm is not None
    return best_perm, gens


def _leaf_auto(n: int, p: list[int], q: list[int]) -> tuple[int, ...]:
    """The automorphism sending p[i] to q[i] for every position i."""
    sigma = [0] * n
    for i in range(n):
        sigma[p[i]] = q[i]
    return tuple(sigma)


def is_automorphism(g: Graph, perm: tuple[int, ...]) -> bool:
    return all(((g.adj[perm[v]] >> perm[u]) & 1) == ((g.adj[v] >> u) & 1)
               for v in range(g.n) for u in bits(g.adj[v]))


def orbit_partition(n: int, gens: list[tuple[int, ...]]) -> list[list[int]]:
    """Vertex orbits under the group generated by ``gens`` (union-find)."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for v in range(n):
            a, b = find(v), find(g[v])
            if a != b:
                parent[b] = a
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def group_order(n: int, gens: list[tuple[int, ...]]) -> int:
    """Order of <gens> by a recursive Schreier-Sims stabilizer chain."""
    identity = tuple(range(n))
    gens = [g for g in gens if g != identity]
    if not gens:
        return 1
    moved = min(v for g in gens for v in range(n) if g[v] != v)
    # orbit of the base point with a transversal
    transversal: dict[int, tuple[int, ...]] = {moved: identity}
    queue = [moved]
    while queue:
        x = queue.pop()
        tx = transversal[x]
        for g in gens:
            y = g[x]
            if y not in transversal:
                transversal[y] = _compose(g, tx)
                queue.append(y)
    stab_gens: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for x, tx in transversal.items():
        for g in gens:
            ty_inv = _inverse(transversal[g[x]])
            s = _compose(ty_inv, _compose(g, tx))
            if s != identity and s not in seen:
                seen.add(s)
                stab_gens.append(s)
    return len(transversal) * group_order(n, stab_gens)


@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism-invariant certificate of a graph.

    Two graphs are isomorphic iff their ``graph6`` fields are equal.
    """

    graph6: str
    group_order: int
    orbits: tuple[tuple[int, ...], ...]


def _canon_raw(n: int, adj: tuple[int, ...]):
    """(canonical labeling old->new, generators) for raw adjacency rows."""
    if n == 1:
        return [0], []
    perm, gens = _search(n, adj)
    labeling = [0] * n
    for i, v in enumerate(perm):
        labeling[v] = i
    return labeling, gens


def canonical_form(g: Graph) -> CanonicalForm:
    labeling, gens = _canon_raw(g.n, g.adj)
    cg = g.relabel(labeling)
    return CanonicalForm(
        graph6=encode_graph6(cg),
        group_order=group_order(g.n, gens),
        orbits=tuple(tuple(o) for o in orbit_partition(g.n, gens)),
    )


def canon_key(g: Graph) -> str:
    """Canonical graph6 string only (the cheap dedupe key)."""
    labeling, _ = _canon_raw(g.n, g.adj)
    return encode_graph6(g.relabel(labeling))


def aut_generators(g: Graph) -> list[tuple[int, ...]]:
    _, gens = _canon_raw(g.n, g.adj)
    return gens


def vertex_orbits(g: Graph) -> list[list[int]]:
    return orbit_partition(g.n, aut_generators(g))


def automorphism_group_order(g: Graph) -> int:
    return group_order(g.n, aut_generators(g))


def group_elements(n: int, gens: list[tuple[int, ...]], cap: int = 200000):
    """All elements of <gens> by BFS closure, or None if more than ``cap``."""
    identity = tuple(range(n))
    elems = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                c = _compose(g, e)
                if c not in elems:
                    if len(elems) >= cap:
                        return None
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return elems


# -- canonical-deletion acceptance for augmentation generators -----------

def accept_new_vertex(n: int, adj: tuple[int, ...], new: int):
    """Canonical-deletion test for vertex-augmentation generation.

    The canonical deletion vertex of a graph is the vertex with minimal
    (degree, sorted neighbor degrees) key; ties are resolved by maximal
    position in the canonical labeling, and acceptance only requires orbit
    membership.  Returns (accepted, labeling_or_None): when the slow path
    ran, the canonical labeling is returned so callers can reuse it.
    """
    degs = [row.bit_count() for row in adj]
    dn = degs[new]
    mind = min(degs)
    if dn > mind:
        return False, None
    mins = [v for v in range(n) if degs[v] == mind]
    if mins == [new]:
        return True, None

    def nbr_degs(v: int) -> list[int]:
        row = adj[v]
        out = []
        while row:
            low = row & -row
            out.append(degs[low.bit_length() - 1])
            row ^= low
        out.sort()
        return out

    best_key = nbr_degs(new)
    best_set = [new]
    for v in mins:
        if v == new:
            continue
        kv = nbr_degs(v)
        if kv < best_key:
            return False, None
        if kv == best_key:
            best_set.append(v)
    if best_set == [new]:
        return True, None
    labeling, gens = _canon_raw(n, adj)
    vstar = max(best_set, key=lambda v: labeling[v])
    if vstar == new:
        return True, labeling
    orbit = _orbit_of(vstar, gens)
    return (new in orbit), labeling
