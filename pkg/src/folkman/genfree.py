"""Isomorph-free exhaustive generation of H-free graphs.

Vertex augmentation with canonical deletion: children of an n-vertex
parent are built by attaching vertex n over every neighborhood subset, a
branch is cut the moment the forbidden pattern appears (the pattern can
only show up through the new vertex), and a child survives only when the
new vertex lies in the canonical-deletion orbit of the child.  Children
of one parent are deduplicated by canonical form, which together with the
deletion rule yields exactly one representative per isomorphism class.

2-connectivity and maximality are applied as post-filters at full order,
never as assumptions during augmentation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .canon import _canon_raw, accept_new_vertex
from .graph6 import encode_graph6
from .graphs import Graph
from .patterns import Pattern, contains_pattern, creates_pattern


@dataclass(frozen=True)
class GenFilter:
    order: int
    forbidden: Pattern | None = None
    require_two_connected: bool = False
    maximal_only: bool = False

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError("order must be >= 1")
        if self.forbidden is not None and self.forbidden.order < 3:
            raise ValueError("forbidden pattern order must be >= 3")


def _canon_key_rows(n: int, rows: tuple[int, ...],
                    labeling: list[int] | None) -> str:
    if labeling is None:
        labeling, _ = _canon_raw(n, rows)
    return encode_graph6(Graph(n, rows).relabel(labeling))


def _augmentations(m: int, rows: tuple[int, ...],
                   forbidden: Pattern | None) -> Iterator[tuple[int, ...]]:
    """All accepted (canonical-deletion) children, deduplicated.

    Acceptance requires the new vertex (degree = |neighborhood|) to have
    weakly minimal degree in the child, so any vertex of degree below
    |S| - 1 kills the candidate and vertices of degree exactly |S| - 1
    must belong to S; both checks are bitmask-cheap and run first.
    """
    seen: set[str] = set()
    newbit = 1 << m
    degs = [row.bit_count() for row in rows]
    # need_mask[s]: vertices that must lie inside a size-s neighborhood;
    # dead[s]: some vertex can never satisfy the minimal-degree rule
    need_mask = [0] * (m + 1)
    dead = [False] * (m + 1)
    for s in range(m + 1):
        for v in range(m):
            if degs[v] < s - 1:
                dead[s] = True
                break
            if degs[v] < s:
                need_mask[s] |= 1 << v
    for nbhd in range(1 << m):
        s = nbhd.bit_count()
        if dead[s] or (need_mask[s] & ~nbhd):
            continue
        if forbidden is not None and creates_pattern(rows, nbhd, forbidden):
            continue
        child = tuple(
            (row | newbit) if (nbhd >> v) & 1 else row
            for v, row in enumerate(rows)) + (nbhd,)
        ok, labeling = accept_new_vertex(m + 1, child, m)
        if not ok:
            continue
        key = _canon_key_rows(m + 1, child, labeling)
        if key in seen:
            continue
        seen.add(key)
        yield child


def generate_free_graphs(f: GenFilter,
                         split: tuple[int, int, int] | None = None,
                         visited: dict[int, set[str]] | None = None
                         ) -> Iterator[Graph]:
    """Stream one Graph per isomorphism class of f.order-vertex graphs
    avoiding the forbidden pattern.

    ``split`` = (depth, part, of) keeps only every of-th subtree at the
    given order so independent runs cover disjoint parts of the search
    tree.  ``visited``, when given, records canonical keys per order for
    prefix-closure audits.
    """
    if split is not None:
        depth, part, of = split
        if not (1 <= depth <= f.order and 0 <= part < of):
            raise ValueError("bad split specification")
    counter = [0]

    def record(m: int, rows: tuple[int, ...]) -> None:
        if visited is not None:
            visited.setdefault(m, set()).add(_canon_key_rows(m, rows, None))

    def emit(rows: tuple[int, ...]) -> Iterator[Graph]:
        g = Graph(f.order, rows)
        if f.require_two_connected and not g.is_two_connected():
            return
        if f.maximal_only and not is_maximal_free(g, f.forbidden):
            return
        yield g

    def extend(m: int, rows: tuple[int, ...]) -> Iterator[Graph]:
        record(m, rows)
        if m == f.order:
            yield from emit(rows)
            return
        for child in _augmentations(m, rows, f.forbidden):
            if split is not None and m + 1 == split[0]:
                idx = counter[0]
                counter[0] += 1
                if idx % split[2] != split[1]:
                    continue
            yield from extend(m + 1, child)

    yield from extend(1, (0,))


def is_maximal_free(g: Graph, p: Pattern | None) -> bool:
    """True iff adding any non-edge creates the pattern."""
    if p is None:
        return g.edge_count == g.n * (g.n - 1) // 2
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v) and not contains_pattern(g.add_edge(u, v), p):
                return False
    return True


def count_free_graphs(f: GenFilter) -> int:
    return sum(1 for _ in generate_free_graphs(f))


def all_graphs(n: int) -> Iterator[Graph]:
    """All graphs on n vertices, one per isomorphism class."""
    return generate_free_graphs(GenFilter(n))
