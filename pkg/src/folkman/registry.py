"""Known-values registry for Folkman numbers.

One record per line:

    Fv|Fe ; targets ; avoided ; lower ; upper ; witness ; citation

with '-' for absent fields.  The witness field is a graph6 string
(``g6:...``), a House of Graphs reference (``HoG:id``, resolved against
the offline fixture directory), or '-'.  Load-time verification checks
pattern-freeness and arrowing for every resolvable witness up to 64
vertices within a per-graph budget; the monotonicity audit checks the
non-decreasing order of the vertex rows per avoided graph.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass

from .arrowing import ArrowSpec, arrows_vertex
from .graph6 import decode_graph6
from .graphs import Graph
from .patterns import contains_pattern, parse_pattern
from .sat import SolverTimeout, arrows_edge_33


@dataclass(frozen=True)
class BoundsEntry:
    kind: str  # "Fv" | "Fe"
    targets: tuple[int, ...]
    avoided: str
    lower: int | None
    upper: int | None
    witness: str | None
    citation: str

    def __post_init__(self) -> None:
        if self.kind not in ("Fv", "Fe"):
            raise ValueError(f"bad registry kind {self.kind!r}")
        if self.lower is not None and self.upper is not None \
                and self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    @property
    def exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    def format_line(self) -> str:
        field = lambda x: "-" if x is None else str(x)
        return " ; ".join([
            self.kind,
            ",".join(map(str, self.targets)),
            self.avoided,
            field(self.lower),
            field(self.upper),
            self.witness or "-",
            self.citation,
        ])


def parse_entry(line: str) -> BoundsEntry:
    parts = [p.strip() for p in line.split(";", 6)]
    if len(parts) != 7:
        raise ValueError(f"registry line needs 7 fields: {line!r}")
    kind, targets, avoided, lower, upper, witness, citation = parts
    return BoundsEntry(
        kind,
        tuple(int(x) for x in targets.split(",")),
        avoided,
        None if lower == "-" else int(lower),
        None if upper == "-" else int(upper),
        None if witness == "-" else witness,
        citation,
    )


class Registry:
    def __init__(self, entries: list[BoundsEntry]):
        self.entries = entries
        self._index = {(e.kind, e.targets, e.avoided): e for e in entries}

    def lookup(self, kind: str, targets: tuple[int, ...],
               avoided: str) -> BoundsEntry | None:
        return self._index.get((kind, targets, avoided))

    @staticmethod
    def load_lines(lines) -> "Registry":
        entries = []
        for line in lines:
            line = line.strip()
            if line and not line.startswith("#"):
                entries.append(parse_entry(line))
        return Registry(entries)

    @staticmethod
    def bundled() -> "Registry":
        text = importlib.resources.files("folkman").joinpath(
            "fixtures/registry.txt").read_text()
        return Registry.load_lines(text.splitlines())


def resolve_witness(witness: str, fixture_dir=None) -> Graph | None:
    """graph6 inline or offline HoG fixture; None when unavailable."""
    if witness.startswith("g6:"):
        return decode_graph6(witness[3:])
    if witness.startswith("HoG:"):
        from .hog import fetch_hog, UnknownHogId
        try:
            return fetch_hog(int(witness[4:]), fixture_dir=fixture_dir)
        except UnknownHogId:
            return None
    raise ValueError(f"bad witness field {witness!r}")


@dataclass(frozen=True)
class WitnessCheck:
    entry: BoundsEntry
    status: str  # "verified" | "no-witness" | "skipped-large" | "undecided" | "FAILED"
    detail: str = ""


def verify_entry(entry: BoundsEntry, fixture_dir=None, budget: float = 60.0,
                 max_order: int = 64) -> WitnessCheck:
    """Check the witness certifies the upper bound: right order,
    pattern-free, and arrowing within the budget."""
    if entry.witness is None:
        return WitnessCheck(entry, "no-witness")
    g = resolve_witness(entry.witness, fixture_dir)
    if g is None:
        return WitnessCheck(entry, "no-witness", "fixture not available")
    if entry.upper is not None and g.n != entry.upper:
        return WitnessCheck(
            entry, "FAILED", f"witness order {g.n} != upper bound {entry.upper}")
    if g.n > max_order:
        return WitnessCheck(entry, "skipped-large", f"order {g.n}")
    pat = parse_pattern(entry.avoided)
    if contains_pattern(g, pat):
        return WitnessCheck(entry, "FAILED", f"witness contains {entry.avoided}")
    try:
        if entry.kind == "Fv":
            ok = arrows_vertex(g, ArrowSpec(entry.targets, "vertex"))[0]
        else:
            ok = arrows_edge_33(g, timeout=budget)[0]
    except SolverTimeout:
        return WitnessCheck(entry, "undecided", "arrowing budget exhausted")
    if not ok:
        return WitnessCheck(entry, "FAILED", "witness does not arrow")
    return WitnessCheck(entry, "verified")


def verify_registry(reg: Registry, fixture_dir=None, budget: float = 60.0
                    ) -> list[WitnessCheck]:
    return [verify_entry(e, fixture_dir, budget) for e in reg.entries]


# the vertex rows of the main table, in non-decreasing display order
_VERTEX_ROW_ORDER = [(2, 3), (2, 2, 3), (3, 3), (2, 3, 3), (3, 3, 3)]


def audit_monotonicity(reg: Registry) -> list[str]:
    """Bounds must be non-decreasing down each avoided-graph column."""
    problems = []
    avoided_names = sorted({e.avoided for e in reg.entries if e.kind == "Fv"})
    for avoided in avoided_names:
        prev = None
        prev_targets = None
        for targets in _VERTEX_ROW_ORDER:
            e = reg.lookup("Fv", targets, avoided)
            if e is None:
                continue
            if prev is not None:
                if prev.lower is not None and e.lower is not None \
                        and prev.lower > e.lower:
                    problems.append(
                        f"{avoided}: lower bound decreases from "
                        f"{prev_targets} to {targets}")
                if prev.upper is not None and e.upper is not None \
                        and prev.upper > e.upper:
                    problems.append(
                        f"{avoided}: upper bound decreases from "
                        f"{prev_targets} to {targets}")
            prev = e
            prev_targets = targets
    return problems
