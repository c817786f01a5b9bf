#!/usr/bin/env python3
"""Hunt for the 11-vertex J6-free graphs that arrow (3,3)^e.

Every such graph known has a universal vertex, and a cone is J6-free
exactly when the base is J5-free, so the sweep runs over all 10-vertex
J5-free graphs and SAT-tests each cone.  Matches are appended to the
output file as graph6 lines (the cone, 11 vertices).
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from folkman.constructions import cone
from folkman.genfree import GenFilter, generate_free_graphs
from folkman.graph6 import encode_graph6
from folkman.graphs import triangle_count
from folkman.patterns import jgraph
from folkman.sat import arrows_edge_33

OUT = Path(__file__).resolve().parent.parent / "found_fe33_j6.g6"


def main() -> None:
    t0 = time.time()
    checked = 0
    skipped = 0
    found = 0
    for h in generate_free_graphs(GenFilter(10, jgraph(5))):
        if triangle_count(h) == 0:
            skipped += 1
            continue
        checked += 1
        if checked % 20000 == 0:
            print(f"{checked} checked, {skipped} trivial, {found} found, "
                  f"{time.time() - t0:.0f}s", flush=True)
        g = cone(h)
        ok, _ = arrows_edge_33(g, timeout=300)
        if ok:
            found += 1
            line = encode_graph6(g)
            print(f"WITNESS: {line}", flush=True)
            with OUT.open("a") as fh:
                fh.write(line + "\n")
    print(f"done: {checked} cones checked, {skipped} triangle-free bases "
          f"skipped, {found} witnesses, {time.time() - t0:.0f}s", flush=True)


if __name__ == "__main__":
    main()
