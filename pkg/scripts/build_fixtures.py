#!/usr/bin/env python3
"""Regenerate the bundled witness fixtures and their checksum manifest.

Every fixture is reconstructed offline from first principles and verified
against its defining properties before being written.  The 11-vertex
(3,3)^e witness comes from the sweep script (found_fe33_j6.g6); pass
--skip-search-outputs to rebuild only the deterministic fixtures.
"""

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from folkman.arrowing import ArrowSpec, arrows_vertex
from folkman.canon import canon_key
from folkman.constructions import cone, polarity_graph_64
from folkman.graph6 import decode_graph6, encode_graph6
from folkman.invariants import independence_number
from folkman.locallinear import is_locally_linear
from folkman.patterns import (clique, contains_pattern, cycle4, jgraph,
                              wheel5)
from folkman.sat import arrows_edge_33
from folkman.witnesses import (circulant_23_5, fv33_j4_witness,
                               fv33_j5_witness, fv333_j6_witness,
                               petersen_complement)

FIXTURES = ROOT / "src" / "folkman" / "fixtures"


def check(cond: bool, what: str) -> None:
    if not cond:
        raise SystemExit(f"fixture verification failed: {what}")
    print(f"  ok: {what}")


def build(args) -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    out: dict[int, str] = {}

    print("45703: complement of the Petersen graph")
    g = petersen_complement()
    check(not contains_pattern(g, jgraph(5)), "J5-free")
    check(arrows_vertex(g, ArrowSpec.vertex(2, 2, 3))[0], "arrows (2,2,3)^v")
    out[45703] = encode_graph6(g)

    print("21154: circulant(10, {2,3,5})")
    g = circulant_23_5()
    check(not contains_pattern(g, jgraph(5)), "J5-free")
    check(arrows_vertex(g, ArrowSpec.vertex(2, 2, 3))[0], "arrows (2,2,3)^v")
    out[21154] = encode_graph6(g)

    print("51287: 11-vertex J5-free (3,3)^v witness")
    g = fv33_j5_witness()
    check(not contains_pattern(g, jgraph(5)), "J5-free")
    check(arrows_vertex(g, ArrowSpec.vertex(3, 3))[0], "arrows (3,3)^v")
    out[51287] = encode_graph6(g)

    print("51285: 15-vertex J6-free (3,3,3)^v witness")
    g = fv333_j6_witness()
    check(not contains_pattern(g, jgraph(6)), "J6-free")
    check(arrows_vertex(g, ArrowSpec.vertex(3, 3, 3))[0], "arrows (3,3,3)^v")
    out[51285] = encode_graph6(g)

    print("51177: polarity graph over GF(8)")
    g = polarity_graph_64()
    check(g.n == 63, "order 63")
    check(not contains_pattern(g, cycle4()), "C4-free")
    check(is_locally_linear(g), "locally linear")
    check(independence_number(g) == 15, "alpha = 15")
    t0 = time.time()
    check(arrows_vertex(g, ArrowSpec.vertex(3, 3))[0],
          f"arrows (3,3)^v ({time.time() - t0:.0f}s)")
    out[51177] = encode_graph6(g)

    print("51236: 45-vertex locally linear J4-free (3,3)^v witness")
    g = fv33_j4_witness()
    check(g.n == 45, "order 45")
    check(is_locally_linear(g), "locally linear")
    check(not contains_pattern(g, jgraph(4)), "J4-free")
    check(independence_number(g) == 10, "alpha = 10")
    check(arrows_vertex(g, ArrowSpec.vertex(3, 3))[0], "arrows (3,3)^v")
    out[51236] = encode_graph6(g)

    if not args.skip_search_outputs:
        found = ROOT / "found_fe33_j6.g6"
        print("51288: 11-vertex J6-free (3,3)^e witness (from sweep)")
        if not found.exists():
            raise SystemExit(f"{found} missing: run find_fe33_j6_witness.py")
        lines = [ln.strip() for ln in found.read_text().splitlines() if ln.strip()]
        keys = sorted({canon_key(decode_graph6(ln)) for ln in lines})
        g = decode_graph6(keys[0])
        check(g.n == 11, "order 11")
        check(not contains_pattern(g, jgraph(6)), "J6-free")
        check(arrows_edge_33(g, timeout=300)[0], "arrows (3,3)^e")
        out[51288] = keys[0]

    print("cone of 51177 (W5-freeness spot check, not stored)")
    check(not contains_pattern(cone(polarity_graph_64()), wheel5()),
          "cone of the polarity graph is W5-free")

    manifest = {}
    for hog_id, line in sorted(out.items()):
        name = f"hog_{hog_id}.g6"
        path = FIXTURES / name
        path.write_text(line + "\n")
        manifest[name] = hashlib.sha256(path.read_bytes()).hexdigest()
    # keep checksums of files we did not rewrite this run
    old = {}
    mpath = FIXTURES / "manifest.json"
    if mpath.exists():
        old = json.loads(mpath.read_text())
    for name, digest in old.items():
        if name not in manifest and (FIXTURES / name).exists():
            manifest[name] = digest
    mpath.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    print(f"wrote {len(out)} fixtures + manifest to {FIXTURES}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--skip-search-outputs", action="store_true")
    build(ap.parse_args())
