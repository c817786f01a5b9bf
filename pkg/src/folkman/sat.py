"""Edge arrowing of (3,3) via CNF satisfiability.

One boolean variable per edge; for every triangle two width-3 clauses
(not all true, not all false), so satisfying assignments are exactly the
2-edge-colorings without a monochromatic triangle.  The embedded solver
is an iterative DPLL over two-watched-literal clauses extended with
first-UIP conflict learning, activity-based branching and Luby restarts:
plain chronological DPLL cannot refute the 64-vertex instances inside the
per-graph budget, learned clauses make them routine.  A DIMACS export
keeps external solvers drop-in.

The encoded formula is invariant under flipping every variable, so one
variable may be pinned when solving standalone.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graphs import Coloring, Graph, triangles


class SolverTimeout(RuntimeError):
    """The satisfiability search exceeded its time budget (undecided)."""


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]
    edge_index: dict  # (u, v) u < v -> 1-based variable
    var_edge: tuple[tuple[int, int], ...]


def encode_cnf_33(g: Graph) -> CnfFormula:
    edges = g.edges()
    edge_index = {e: i + 1 for i, e in enumerate(edges)}
    clauses: list[tuple[int, ...]] = []
    for (a, b, c) in triangles(g):
        e1, e2, e3 = edge_index[(a, b)], edge_index[(a, c)], edge_index[(b, c)]
        clauses.append((e1, e2, e3))
        clauses.append((-e1, -e2, -e3))
    return CnfFormula(len(edges), tuple(clauses), edge_index, tuple(edges))


def to_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {len(f.clauses)}"]
    for clause in f.clauses:
        lines.append(" ".join(map(str, clause)) + " 0")
    return "\n".join(lines) + "\n"


_LUBY_BASE = 256


def _luby(x: int) -> int:
    """Luby sequence 1,1,2,1,1,2,4,... (x is the 0-indexed restart count)."""
    size, seq = 1, 0
    while size < x + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != x:
        size = (size - 1) >> 1
        seq -= 1
        x = x % size
    return 1 << seq


def solve_cnf(f: CnfFormula, assumptions: tuple[int, ...] = (),
              timeout: float | None = None,
              break_flip_symmetry: bool = False) -> list[bool] | None:
    """Model as bools indexed 1..num_vars, or None if unsatisfiable.

    Raises SolverTimeout when the budget is exhausted; the caller decides
    how to surface the undecided outcome.
    """
    nv = f.num_vars
    if nv == 0:
        return [] if not f.clauses else None
    clauses: list[list[int]] = [list(c) for c in f.clauses]
    values = [0] * (nv + 1)   # 0 unknown, 1 true, -1 false
    levels = [0] * (nv + 1)
    reasons: list[int] = [-1] * (nv + 1)
    saved_phase = [False] * (nv + 1)
    activity = [0.0] * (nv + 1)
    var_inc = 1.0

    watches: list[list[int]] = [[] for _ in range(2 * nv + 2)]

    def code(lit: int) -> int:
        return 2 * lit if lit > 0 else -2 * lit + 1

    def watch_clause(ci: int) -> None:
        cl = clauses[ci]
        watches[code(cl[0])].append(ci)
        watches[code(cl[1])].append(ci)

    units: list[int] = []
    for ci, cl in enumerate(clauses):
        if len(cl) == 1:
            units.append(cl[0])
        else:
            watch_clause(ci)

    trail: list[int] = []
    trail_lim: list[int] = []
    qhead = 0

    def value_of(lit: int) -> int:
        v = values[abs(lit)]
        return v if lit > 0 else -v

    def enqueue(lit: int, reason: int) -> bool:
        val = value_of(lit)
        if val == 1:
            return True
        if val == -1:
            return False
        var = abs(lit)
        values[var] = 1 if lit > 0 else -1
        levels[var] = len(trail_lim)
        reasons[var] = reason
        saved_phase[var] = lit > 0
        trail.append(lit)
        return True

    deadline = None if timeout is None else time.monotonic() + timeout
    ticks = 0

    def propagate() -> int:
        """Returns a conflicting clause index or -1."""
        nonlocal qhead, ticks
        while qhead < len(trail):
            lit = trail[qhead]
            qhead += 1
            ticks += 1
            if deadline is not None and ticks % 4096 == 0 \
                    and time.monotonic() > deadline:
                raise SolverTimeout("edge-arrowing SAT budget exhausted")
            falsified = code(-lit)
            watchers = watches[falsified]
            i = 0
            while i < len(watchers):
                ci = watchers[i]
                cl = clauses[ci]
                if cl[0] == -lit:
                    cl[0], cl[1] = cl[1], cl[0]
                first = cl[0]
                if values[abs(first)] * (1 if first > 0 else -1) == 1:
                    i += 1
                    continue
                moved = False
                for j in range(2, len(cl)):
                    lj = cl[j]
                    if values[abs(lj)] * (1 if lj > 0 else -1) != -1:
                        cl[1], cl[j] = cl[j], cl[1]
                        watches[code(lj)].append(ci)
                        watchers[i] = watchers[-1]
                        watchers.pop()
                        moved = True
                        break
                if moved:
                    continue
                if not enqueue(first, ci):
                    return ci
                i += 1
        return -1

    def bump(var: int) -> None:
        nonlocal var_inc
        activity[var] += var_inc
        if activity[var] > 1e100:
            for v in range(1, nv + 1):
                activity[v] *= 1e-100
            var_inc *= 1e-100

    seen = [False] * (nv + 1)

    def analyze(confl: int) -> tuple[list[int], int]:
        """First-UIP learned clause and backjump level."""
        learned: list[int] = [0]
        counter = 0
        p = 0
        index = len(trail) - 1
        cur_level = len(trail_lim)
        while True:
            cl = clauses[confl]
            for q in cl:
                if p != 0 and q == -p:
                    continue  # the literal this reason clause implied
                var = abs(q)
                if not seen[var] and levels[var] > 0:
                    seen[var] = True
                    bump(var)
                    if levels[var] >= cur_level:
                        counter += 1
                    else:
                        learned.append(q)
            while not seen[abs(trail[index])]:
                index -= 1
            plit = trail[index]
            p = -plit
            var = abs(plit)
            index -= 1
            counter -= 1
            seen[var] = False
            if counter == 0:
                learned[0] = p
                break
            confl = reasons[var]
        for q in learned[1:]:
            seen[abs(q)] = False
        if len(learned) == 1:
            return learned, 0
        back = max(levels[abs(q)] for q in learned[1:])
        # move one literal of the backjump level to the second watch slot
        for j in range(1, len(learned)):
            if levels[abs(learned[j])] == back:
                learned[1], learned[j] = learned[j], learned[1]
                break
        return learned, back

    def cancel_until(level: int) -> None:
        nonlocal qhead
        if len(trail_lim) <= level:
            return
        bound = trail_lim[level]
        for lit in reversed(trail[bound:]):
            values[abs(lit)] = 0
        del trail[bound:]
        del trail_lim[level:]
        qhead = len(trail)

    # level-0 setup: file units, assumptions, symmetry pin
    for lit in units:
        if not enqueue(lit, -1):
            return None
    for lit in assumptions:
        if not enqueue(lit, -1):
            return None
    if break_flip_symmetry and not assumptions and not units and nv > 0:
        occ = [0] * (nv + 1)
        for cl in clauses:
            for lit in cl:
                occ[abs(lit)] += 1
        pin = max(range(1, nv + 1), key=lambda v: occ[v])
        enqueue(pin, -1)
    if propagate() != -1:
        return None

    conflicts_total = 0
    restart_num = 0
    conflict_budget = _LUBY_BASE * _luby(restart_num)
    conflicts_here = 0

    import heapq
    heap = [(-activity[v], v) for v in range(1, nv + 1)]
    heapq.heapify(heap)

    def pick_var() -> int:
        while heap:
            negact, v = heap[0]
            if values[v] == 0 and -negact == activity[v]:
                return v
            heapq.heappop(heap)
            if values[v] == 0:
                heapq.heappush(heap, (-activity[v], v))
                if heap[0][1] == v and -heap[0][0] == activity[v]:
                    return v
        for v in range(1, nv + 1):
            if values[v] == 0:
                return v
        return 0

    while True:
        confl = propagate()
        if confl != -1:
            conflicts_total += 1
            conflicts_here += 1
            if deadline is not None and conflicts_total % 16 == 0 \
                    and time.monotonic() > deadline:
                raise SolverTimeout("edge-arrowing SAT budget exhausted")
            if not trail_lim:
                return None
            learned, back = analyze(confl)
            cancel_until(back)
            if len(learned) == 1:
                if not enqueue(learned[0], -1):
                    return None
            else:
                clauses.append(learned)
                ci = len(clauses) - 1
                watch_clause(ci)
                enqueue(learned[0], ci)
            var_inc /= 0.95
            for q in learned:
                heapq.heappush(heap, (-activity[abs(q)], abs(q)))
            continue
        if conflicts_here >= conflict_budget:
            restart_num += 1
            conflict_budget = _LUBY_BASE * _luby(restart_num)
            conflicts_here = 0
            cancel_until(0)
            continue
        var = pick_var()
        if var == 0:
            return [values[v] == 1 for v in range(1, nv + 1)]
        trail_lim.append(len(trail))
        enqueue(var if saved_phase[var] else -var, -1)


def arrows_edge_33(g: Graph, timeout: float | None = 60.0
                   ) -> tuple[bool, Coloring | None]:
    """True iff the (3,3)^e CNF is unsatisfiable.

    On False the model is decoded to an edge coloring and re-verified
    directly on g.  SolverTimeout propagates as the undecided outcome.
    """
    f = encode_cnf_33(g)
    model = solve_cnf(f, timeout=timeout, break_flip_symmetry=True)
    if model is None:
        return True, None
    assignment = tuple(0 if model[i] else 1 for i in range(f.num_vars))
    coloring = Coloring("edge", assignment)
    if not verify_edge_coloring_33(g, coloring):
        raise AssertionError("solver returned a bad model")
    return False, coloring


def verify_edge_coloring_33(g: Graph, coloring: Coloring) -> bool:
    """No monochromatic triangle under the edge coloring."""
    edges = g.edges()
    color = {e: coloring.assignment[i] for i, e in enumerate(edges)}
    for (a, b, c) in triangles(g):
        if color[(a, b)] == color[(a, c)] == color[(b, c)]:
            return False
    return True
