"""Closed-form Folkman values and derived bounds.

With m = 1 + sum(a_i - 1) and p = max(a_i): avoiding K_m the value is
m + p provided m >= p + 1; avoiding K_{m-1} with p = 3 and m >= 6 it is
m + 6.  The composite product bound chains F_v(2,2,2;3) with an upper
bound on F_v(3,3,3;K4) into bounds for F_v(6,6,6;7) and F_e(3,3,3;8).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrowing import ArrowSpec
from .graphs import Graph
from .invariants import clique_number, independence_number
from .patterns import Pattern


@dataclass(frozen=True)
class ClassicalParams:
    m: int
    p: int

    @staticmethod
    def from_spec(spec: ArrowSpec) -> "ClassicalParams":
        targets = spec.targets
        return ClassicalParams(1 + sum(a - 1 for a in targets), max(targets))


def classical_value(spec: ArrowSpec, avoided: Pattern) -> int | None:
    """Exact F_v value when a closed form applies, else None."""
    if spec.mode != "vertex" or avoided.kind != "clique":
        return None
    params = ClassicalParams.from_spec(spec.normalized())
    m, p = params.m, params.p
    s = avoided.k
    if s == m and m >= p + 1:
        return m + p
    if s == m - 1 and p == 3 and m >= 6:
        return m + 6
    return None


class MissingRegistryInput(KeyError):
    """A derived bound needs a registry entry that is not present."""


def composite_bounds(registry) -> list:
    """Derive F_v(6,6,6;7) <= F_v(2,2,2;3) * ub(F_v(3,3,3;4)) and
    F_e(3,3,3;8) <= F_v(6,6,6;7) + 1 from registry inputs.

    ``registry`` is any object with a ``lookup(kind, targets, avoided)``
    returning an entry with .lower/.upper, or a plain dict keyed by
    (kind, targets, avoided-string).
    """
    from .registry import BoundsEntry

    def fetch(kind: str, targets: tuple[int, ...], avoided: str):
        if hasattr(registry, "lookup"):
            e = registry.lookup(kind, targets, avoided)
        else:
            e = registry.get((kind, targets, avoided))
        if e is None:
            raise MissingRegistryInput(
                f"registry lacks {kind}({','.join(map(str, targets))};{avoided})")
        return e

    base = fetch("Fv", (2, 2, 2), "K3")
    factor = fetch("Fv", (3, 3, 3), "K4")
    if base.upper is None:
        raise MissingRegistryInput("F_v(2,2,2;K3) has no upper bound")
    if factor.upper is None:
        raise MissingRegistryInput("F_v(3,3,3;K4) has no upper bound")
    prod = base.upper * factor.upper
    chain = (f"product bound: F_v(2,2,2;3)={base.upper} * "
             f"F_v(3,3,3;4)<={factor.upper}")
    e1 = BoundsEntry("Fv", (6, 6, 6), "K7", None, prod, None, chain)
    e2 = BoundsEntry("Fe", (3, 3, 3), "K8", None, prod + 1, None,
                     f"successor of the product bound ({prod})")
    return [e1, e2]


def is_ramsey_graph(g: Graph, s: int, t: int) -> bool:
    """No K_s and no independent set of size t."""
    return clique_number(g) < s and independence_number(g) < t
