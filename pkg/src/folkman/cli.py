"""Command-line surface: generators, arrowing filters, registry checks.

Graphs stream as one graph6 line per record on stdin/stdout, so pipelines
compose with standard text tools.  Exit codes: 0 success, 1 usage error,
2 verification failure.  Per-graph failures (solver timeouts) go to
stderr without aborting the stream.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .arrowing import ArrowSpec, arrows_vertex, parse_arrow_spec
from .canon import canon_key
from .genfree import GenFilter, generate_free_graphs, is_maximal_free
from .graph6 import decode_any, encode_graph6
from .graphs import Graph
from .locallinear import LLTask, generate_ll, is_mll, ll_census
from .patterns import parse_pattern
from .polycirculant import (BlockStructure, GenTask,
                            generate_semipolycirculant, parse_task_line)
from .sat import SolverTimeout, arrows_edge_33

USAGE_ERROR = 1
VERIFY_ERROR = 2


def _read_graphs(path: str):
    stream = sys.stdin if path == "-" else open(path)
    with stream if path != "-" else _nullcontext(stream):
        for line in stream:
            line = line.strip()
            if line:
                yield decode_any(line)


class _nullcontext:
    def __init__(self, x):
        self.x = x

    def __enter__(self):
        return self.x

    def __exit__(self, *a):
        return False


def _out_stream(path: str):
    return sys.stdout if path == "-" else open(path, "w")


def _parse_split(text: str | None):
    if text is None:
        return None
    try:
        depth, rest = text.split(":")
        part, of = rest.split("/")
        return (int(depth), int(part), int(of))
    except ValueError:
        raise SystemExit(USAGE_ERROR)


def _emit_graphs(graphs, out_path: str) -> None:
    out = _out_stream(out_path)
    try:
        for g in graphs:
            out.write(encode_graph6(g) + "\n")
    finally:
        if out is not sys.stdout:
            out.close()


def cmd_gen_free(args) -> int:
    pat = parse_pattern(args.forbid) if args.forbid else None
    f = GenFilter(args.n, pat, args.two_connected, args.maximal)
    _emit_graphs(generate_free_graphs(f, split=_parse_split(args.split)),
                 args.out)
    return 0


def cmd_gen_ll(args) -> int:
    task = LLTask(args.n, c4free=args.c4free, maximal_only=args.mll)
    _emit_graphs(generate_ll(task, split=_parse_split(args.split)), args.out)
    return 0


def cmd_gen_poly(args) -> int:
    if args.task:
        with open(args.task) as fh:
            line = fh.read().strip()
        task = parse_task_line(line)
    else:
        blocks = tuple(int(x) for x in args.blocks.split(","))
        pat = parse_pattern(args.forbid) if args.forbid else None
        task = GenTask(BlockStructure(blocks), pat, args.alpha_max)
    _emit_graphs(generate_semipolycirculant(task), args.out)
    return 0


def _arrow_one(payload):
    text, spec_text, timeout = payload
    g = decode_any(text)
    spec = parse_arrow_spec(spec_text)
    try:
        if spec.mode == "vertex":
            ok, coloring = arrows_vertex(g, spec)
        else:
            ok, coloring = arrows_edge_33(g, timeout=timeout)
    except SolverTimeout:
        return (text, "undecided", None)
    colors = None if coloring is None else ",".join(map(str, coloring.assignment))
    return (text, "arrows" if ok else "does not arrow", colors)


def cmd_arrow(args) -> int:
    spec = parse_arrow_spec(args.spec)  # validated eagerly
    del spec
    lines = []
    for g in _read_graphs(getattr(args, "in")):
        lines.append(encode_graph6(g))
    payloads = [(line, args.spec, args.timeout) for line in lines]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(_arrow_one, payloads))
    else:
        results = [_arrow_one(p) for p in payloads]
    for text, verdict, colors in results:
        if verdict == "undecided":
            print(f"{text} undecided: solver budget exhausted", file=sys.stderr)
            continue
        if colors is not None and args.witness:
            print(f"{text} {verdict} coloring={colors}")
        else:
            print(f"{text} {verdict}")
    return 0


def cmd_extend(args) -> int:
    from .constructions import ExtensionTask, k_extensions
    base = decode_any(args.base)
    pat = parse_pattern(args.forbid) if args.forbid else None
    task = ExtensionTask(base, args.k, pat, args.independent)
    _emit_graphs(k_extensions(task), args.out)
    return 0


def cmd_minimize(args) -> int:
    from .constructions import minimize_witness
    spec = parse_arrow_spec(args.spec)
    pat = parse_pattern(args.forbid) if args.forbid else None
    for g in _read_graphs(getattr(args, "in")):
        try:
            res = minimize_witness(g, spec, pat,
                                   remove_max_independent_first=args.mis_first,
                                   timeout=args.timeout)
        except ValueError as exc:
            print(f"{encode_graph6(g)} error: {exc}", file=sys.stderr)
            return VERIFY_ERROR
        flag = "edge-minimal" if res.edge_minimal else "not-edge-minimal"
        print(f"{encode_graph6(res.graph)} removed={res.removed} {flag}")
    return 0


def cmd_search(args) -> int:
    from .search import FolkmanQuery, search_folkman
    spec = parse_arrow_spec(args.spec)
    pat = parse_pattern(args.forbid) if args.forbid else None
    kwargs = {}
    gen = args.gen
    if gen.startswith("poly:"):
        kwargs["blocks"] = tuple(int(x) for x in gen[len("poly:"):].split(","))
        kwargs["alpha_bound"] = args.alpha_max
        gen = "polycirculant"
    elif gen.startswith("ext:"):
        base_text, k = gen[len("ext:"):].rsplit(",", 1)
        kwargs["base"] = decode_any(base_text)
        kwargs["extension_k"] = int(k)
        gen = "extensions"
    elif gen == "ll":
        gen = "locally-linear"
    q = FolkmanQuery(spec, pat, args.n, gen,
                     two_connected=args.two_connected, **kwargs)
    report = search_folkman(q, timeout=args.timeout)
    print(f"checked={report.graphs_checked} exhaustive={report.exhaustive} "
          f"witnesses={len(report.witnesses)} undecided={len(report.undecided)}")
    for w in report.witnesses:
        print(w)
    for u in report.undecided:
        print(f"{u} undecided", file=sys.stderr)
    return 0


def cmd_registry(args) -> int:
    from .registry import Registry, audit_monotonicity, verify_registry
    reg = Registry.bundled() if args.file is None \
        else Registry.load_lines(open(args.file))
    if args.action == "show":
        for e in reg.entries:
            print(e.format_line())
        return 0
    if args.action == "audit":
        problems = audit_monotonicity(reg)
        for p in problems:
            print(p)
        return VERIFY_ERROR if problems else 0
    # verify
    failed = False
    for check in verify_registry(reg, budget=args.timeout):
        e = check.entry
        name = f"{e.kind}({','.join(map(str, e.targets))};{e.avoided})"
        print(f"{name}: {check.status} {check.detail}".rstrip())
        if check.status == "FAILED":
            failed = True
    return VERIFY_ERROR if failed else 0


def cmd_thm1(args) -> int:
    if args.thm1_action == "check":
        from .theorem import check_minimal_cop2p3_properties
        worst = 0
        for g in _read_graphs(getattr(args, "in")):
            try:
                rep = check_minimal_cop2p3_properties(g)
            except ValueError as exc:
                print(f"{encode_graph6(g)} error: {exc}", file=sys.stderr)
                return VERIFY_ERROR
            verdicts = " ".join(
                f"{i}:{'pass' if rep.verdicts[i] else 'FAIL'}"
                for i in sorted(rep.verdicts))
            print(f"{encode_graph6(g)} {verdicts}")
            if not rep.passed():
                worst = VERIFY_ERROR
        return worst
    # mindeg
    from .theorem import min_degree_lower_bound
    for rec in min_degree_lower_bound(args.max_n):
        if rec.all_extendable:
            print(f"n={rec.order} graphs={rec.graphs_considered} "
                  f"colorings={rec.colorings_checked} all-extendable")
        else:
            col = ",".join(map(str, rec.witness_coloring))
            print(f"n={rec.order} graphs={rec.graphs_considered} "
                  f"colorings={rec.colorings_checked} "
                  f"non-extendable witness={rec.witness_graph6} coloring={col}")
    return 0


def cmd_counts(args) -> int:
    fam = args.family
    if fam in ("ll", "mll"):
        census = ll_census(args.max_n)
        for n in range(5, args.max_n + 1):
            print(f"{n} {census[n][0] if fam == 'll' else census[n][1]}")
        return 0
    if fam in ("c4ll", "maxc4ll"):
        census = ll_census(args.max_n, c4free=True)
        for n in range(5, args.max_n + 1):
            print(f"{n} {census[n][0] if fam == 'c4ll' else census[n][1]}")
        return 0
    if fam == "table":
        census = ll_census(args.max_n)
        census4 = ll_census(args.max_n, c4free=True)
        print("n ll mll c4free maxc4free")
        for n in range(5, args.max_n + 1):
            print(f"{n} {census[n][0]} {census[n][1]} "
                  f"{census4[n][0]} {census4[n][1]}")
        return 0
    if fam in ("j4free", "maxj4free"):
        from .patterns import jgraph
        for n in range(5, args.max_n + 1):
            total = 0
            for g in generate_free_graphs(GenFilter(n, jgraph(4))):
                if fam == "j4free" or is_maximal_free(g, jgraph(4)):
                    total += 1
            print(f"{n} {total}")
        return 0
    raise SystemExit(USAGE_ERROR)


def cmd_fetch_hog(args) -> int:
    from .hog import fetch_hog
    g = fetch_hog(args.id, allow_network=args.network)
    print(encode_graph6(g))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="folkman",
        description="constrained graph generation and Ramsey-arrowing toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common_out(p):
        p.add_argument("-o", "--out", default="-", help="output file or -")

    p = sub.add_parser("gen-free", help="exhaustive H-free generation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--forbid", help="pattern like J4, K5, C4, W5, coP2P3")
    p.add_argument("--two-connected", action="store_true")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--split", help="depth:part/of prefix split")
    add_common_out(p)
    p.set_defaults(fn=cmd_gen_free)

    p = sub.add_parser("gen-ll", help="locally linear generation")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c4free", action="store_true")
    p.add_argument("--mll", action="store_true")
    p.add_argument("--split")
    add_common_out(p)
    p.set_defaults(fn=cmd_gen_ll)

    p = sub.add_parser("gen-poly", help="semi-polycirculant generation")
    p.add_argument("--blocks", help="15,15,15")
    p.add_argument("--forbid")
    p.add_argument("--alpha-max", type=int)
    p.add_argument("--task", help="task file: blocks=.. forbid=.. alpha<=..")
    add_common_out(p)
    p.set_defaults(fn=cmd_gen_poly)

    p = sub.add_parser("arrow", help="filter stdin graphs by arrowing")
    p.add_argument("--spec", required=True, help="v:3,3 or e:3,3")
    p.add_argument("--in", default="-")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timeout", type=float, default=60.0)
    p.add_argument("--witness", action="store_true",
                   help="print the good coloring on non-arrowing graphs")
    p.set_defaults(fn=cmd_arrow)

    p = sub.add_parser("extend", help="k-extensions of a base graph")
    p.add_argument("--base", required=True, help="graph6 string")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--forbid")
    p.add_argument("--independent", action="store_true")
    add_common_out(p)
    p.set_defaults(fn=cmd_extend)

    p = sub.add_parser("minimize", help="shrink witnesses to vertex-minimal")
    p.add_argument("--spec", required=True)
    p.add_argument("--forbid")
    p.add_argument("--in", default="-")
    p.add_argument("--mis-first", action="store_true")
    p.add_argument("--timeout", type=float, default=60.0)
    p.set_defaults(fn=cmd_minimize)

    p = sub.add_parser("search", help="generate + arrow at one order")
    p.add_argument("--spec", required=True)
    p.add_argument("--forbid")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gen", default="exhaustive",
                   help="exhaustive | ll | poly:B1,B2,.. | ext:<g6>,<k>")
    p.add_argument("--alpha-max", type=int)
    p.add_argument("--two-connected", action="store_true")
    p.add_argument("--timeout", type=float, default=60.0)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("registry", help="known-values registry")
    p.add_argument("action", choices=["show", "verify", "audit"])
    p.add_argument("--file")
    p.add_argument("--timeout", type=float, default=60.0)
    p.set_defaults(fn=cmd_registry)

    p = sub.add_parser("thm1", help="minimal-witness structure checks")
    tsub = p.add_subparsers(dest="thm1_action", required=True)
    pc = tsub.add_parser("check")
    pc.add_argument("--in", default="-")
    pc.set_defaults(fn=cmd_thm1)
    pm = tsub.add_parser("mindeg")
    pm.add_argument("--max-n", type=int, default=8)
    pm.set_defaults(fn=cmd_thm1)

    p = sub.add_parser("counts", help="table rows for graph families")
    p.add_argument("--family", required=True,
                   choices=["ll", "mll", "c4ll", "maxc4ll", "table",
                            "j4free", "maxj4free"])
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(fn=cmd_counts)

    p = sub.add_parser("fetch-hog", help="load a witness fixture by HoG id")
    p.add_argument("--id", type=int, required=True)
    p.add_argument("--network", action="store_true",
                   help="allow a live fetch when no fixture exists")
    p.set_defaults(fn=cmd_fetch_hog)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0,) else 0
    try:
        return args.fn(args)
    except (ValueError, KeyError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
