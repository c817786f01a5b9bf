"""Search orchestration: generate, filter by arrowing, report witnesses.

A query names the arrowing spec, the avoided pattern, the order and a
generator.  The exhaustive flag in the report is strict: it is set only
when the generator provably covers every graph of that order (the
exhaustive generator, or an extension search whose reduction argument the
caller vouches for); the heuristic generators never set it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .arrowing import ArrowSpec, arrows_vertex
from .canon import canon_key
from .constructions import ExtensionTask, k_extensions
from .genfree import GenFilter, generate_free_graphs
from .graph6 import encode_graph6
from .graphs import Graph
from .locallinear import LLTask, generate_ll
from .patterns import Pattern, contains_pattern
from .polycirculant import BlockStructure, GenTask, generate_semipolycirculant
from .sat import SolverTimeout, arrows_edge_33


@dataclass(frozen=True)
class FolkmanQuery:
    spec: ArrowSpec
    avoided: Pattern | None
    order: int
    generator: str = "exhaustive"  # exhaustive | locally-linear | polycirculant | extensions
    blocks: tuple[int, ...] | None = None
    alpha_bound: int | None = None
    base: Graph | None = None
    extension_k: int = 0
    extension_independent_only: bool = False
    reduction_proven: bool = False
    two_connected: bool = False

    def __post_init__(self) -> None:
        if self.spec.mode == "edge" and tuple(self.spec.targets) != (3, 3):
            raise ValueError("edge mode supports only targets (3,3)")
        if self.generator == "polycirculant" and self.blocks is None:
            raise ValueError("polycirculant queries need blocks")
        if self.generator == "extensions" and self.base is None:
            raise ValueError("extension queries need a base graph")


@dataclass
class SearchReport:
    witnesses: list[str] = field(default_factory=list)  # canonical graph6
    exhaustive: bool = False
    graphs_checked: int = 0
    undecided: list[str] = field(default_factory=list)


def _generate(q: FolkmanQuery) -> Iterator[Graph]:
    if q.generator == "exhaustive":
        yield from generate_free_graphs(
            GenFilter(q.order, q.avoided, require_two_connected=q.two_connected))
    elif q.generator == "locally-linear":
        c4free = q.avoided is not None and q.avoided.kind == "cycle4"
        for g in generate_ll(LLTask(q.order, c4free=c4free)):
            if q.avoided is not None and contains_pattern(g, q.avoided):
                continue
            yield g
    elif q.generator == "polycirculant":
        task = GenTask(BlockStructure(q.blocks), q.avoided, q.alpha_bound)
        for g in generate_semipolycirculant(task):
            if g.n == q.order:
                yield g
    elif q.generator == "extensions":
        task = ExtensionTask(q.base, q.extension_k, q.avoided,
                             q.extension_independent_only)
        for g in k_extensions(task):
            if g.n == q.order:
                yield g
    else:
        raise ValueError(f"unknown generator {q.generator!r}")


def search_folkman(q: FolkmanQuery, timeout: float | None = 60.0
                   ) -> SearchReport:
    report = SearchReport()
    report.exhaustive = (q.generator == "exhaustive"
                         or (q.generator == "extensions" and q.reduction_proven))
    found: set[str] = set()
    for g in _generate(q):
        report.graphs_checked += 1
        try:
            if q.spec.mode == "vertex":
                ok = arrows_vertex(g, q.spec)[0]
            else:
                ok = arrows_edge_33(g, timeout=timeout)[0]
        except SolverTimeout:
            report.undecided.append(encode_graph6(g))
            continue
        if ok:
            key = canon_key(g)
            if key not in found:
                found.add(key)
                report.witnesses.append(key)
    report.witnesses.sort()
    return report
