"""Command-line interface.

Exit codes: 0 success/true, 1 false/no witness, 2 input error,
3 search budget or enumeration bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import degseq, packing, potential, ramsey, verify
from .degseq import DEFAULT_NODE_BUDGET, DegreeSequence
from .errors import DomainError, InputError, ResourceError
from .formats import from_graph6, to_edge_list, to_graph6
from .generate import enumerate_graphs, enumerate_trees
from .graph import Graph, complement_graph, complete_graph, cycle_graph, path_graph, star_graph

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

_NAMED = re.compile(r"^([KPSC])(\d+)$")
_TREE = re.compile(r"^T(\d+):(\d+)$")


def parse_graph(text: str) -> Graph:
    """Named target (K4, P6, S5 = K_{1,4}, C5, T8:3 = tree #3 of order 8) or graph6."""
    m = _NAMED.match(text)
    if m:
        kind, k = m.group(1), int(m.group(2))
        if k < 1:
            raise InputError(f"order must be positive in {text!r}")
        return {"K": complete_graph, "P": path_graph, "S": star_graph, "C": cycle_graph}[kind](k)
    m = _TREE.match(text)
    if m:
        t, idx = int(m.group(1)), int(m.group(2))
        trees = list(enumerate_trees(t))
        if idx >= len(trees):
            raise InputError(f"{text!r}: there are only {len(trees)} trees of order {t}")
        return trees[idx]
    return from_graph6(text)


def _emit(args, human: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(human)


def _seq(text: str) -> DegreeSequence:
    return DegreeSequence.parse(text)


# --- subcommands ------------------------------------------------------------


def cmd_graphic(args) -> int:
    s = _seq(args.sequence)
    ok = degseq.is_graphic(s)
    _emit(args, "graphic" if ok else "not graphic", {"sequence": list(s.terms), "graphic": ok})
    return EXIT_OK if ok else EXIT_FALSE


def cmd_realize(args) -> int:
    s = _seq(args.sequence)
    if not degseq.is_graphic(s):
        _emit(args, "not graphic", {"sequence": list(s.terms), "graphic": False})
        return EXIT_FALSE
    g = degseq.realize(s)
    human = to_graph6(g) if args.output == "graph6" else to_edge_list(g).rstrip("\n")
    _emit(args, human, {"sequence": list(s.terms), "graph6": to_graph6(g), "edges": sorted(map(list, g.edges))})
    return EXIT_OK


def cmd_complement(args) -> int:
    if args.graph:
        g = complement_graph(parse_graph(args.value))
        _emit(args, to_graph6(g), {"graph6": to_graph6(g)})
        return EXIT_OK
    s = degseq.complement_sequence(_seq(args.value))
    _emit(args, str(s), {"complement": list(s.terms)})
    return EXIT_OK


def _witness_payload(w: potential.PotentialWitness | None) -> dict:
    if w is None:
        return {"witness": None}
    return {"witness": {"graph6": to_graph6(w.realization), "embedding": list(w.embedding)}}


def _witness_text(w: potential.PotentialWitness | None) -> str:
    if w is None:
        return "NO WITNESS"
    lines = [to_graph6(w.realization)]
    lines.extend(f"{x} -> {v}" for x, v in enumerate(w.embedding))
    return "\n".join(lines)


def cmd_potential(args) -> int:
    s = _seq(args.sequence)
    if args.check in ("clique-sufficient", "tree-sufficient", "star", "degree-bounds"):
        if args.check == "clique-sufficient":
            ok = potential.clique_sufficient(s, _need(args.k, "-k"))
        elif args.check == "tree-sufficient":
            ok = potential.tree_sufficient(s, _need(args.t, "-t"))
        elif args.check == "star":
            ok = potential.star_potential(s, _need(args.t, "-t"))
        else:
            ok = potential.degree_bounds(s, _need(args.k, "-k"), _need(args.t, "-t"))
        _emit(args, "true" if ok else "false", {"sequence": list(s.terms), "check": args.check, "holds": ok})
        return EXIT_OK if ok else EXIT_FALSE
    if args.target is None:
        raise InputError("a target graph is required for this check")
    h = parse_graph(args.target)
    if not degseq.is_graphic(s):
        raise InputError(f"sequence {s} is not graphic")
    if args.check == "top-degree":
        w = potential.top_degree_embedding(s, h, budget=args.node_budget)
    else:
        w = potential.potentially(s, h, fast=not args.no_fast, budget=args.node_budget)
    _emit(args, _witness_text(w), {"sequence": list(s.terms), **_witness_payload(w)})
    return EXIT_OK if w is not None else EXIT_FALSE


def _need(value, flag):
    if value is None:
        raise InputError(f"{flag} is required for this check")
    return value


def cmd_pack(args) -> int:
    g, h = parse_graph(args.host), parse_graph(args.guest)
    method = args.method
    if method == "auto":
        method = "linkswap" if _forest_ok(g, h) else "exact"
    if method == "linkswap":
        p = packing.link_swap_pack(g, h)
    else:
        p = packing.exact_pack(g, h)
    if p is None:
        _emit(args, "NO PACKING", {"method": method, "packing": None})
        return EXIT_FALSE
    human = "\n".join(f"{i} -> {j}" for i, j in enumerate(p.map))
    _emit(args, human, {"method": method, "packing": list(p.map), "swaps": p.swaps})
    return EXIT_OK


def _forest_ok(g: Graph, h: Graph) -> bool:
    try:
        return packing.forest_condition(g, h)
    except InputError:
        return False


def cmd_rpot(args) -> int:
    inst = ramsey.RpotInstance(parse_graph(args.h1), parse_graph(args.h2), args.nmax)
    rep = ramsey.rpot_exact(inst, budget=args.node_budget, jobs=args.jobs)
    lines = []
    for v in rep.per_n:
        extra = "" if v.holds else f"  counterexample {v.counterexample}"
        lines.append(f"N={v.n}: {'holds' if v.holds else 'fails'}{extra}")
    lines.append(f"minimal_n: {rep.minimal_n if rep.minimal_n is not None else f'> {args.nmax}'}")
    lines.append(f"monotone: {rep.monotone}")
    _emit(args, "\n".join(lines), rep.to_json())
    return EXIT_OK if rep.minimal_n is not None else EXIT_FALSE


def cmd_witness(args) -> int:
    want = 1 if args.kind == "star" else 2
    if len(args.params) != want:
        raise InputError(f"--kind {args.kind} takes {want} integer(s), got {len(args.params)}")
    a, b = (args.params + [0])[:2]
    if args.kind == "lower":
        s = ramsey.lower_bound_witness(a, b, budget=args.node_budget)
        _emit(args, str(s), {"kind": "lower", "sequence": list(s.terms)})
        return EXIT_OK
    if args.kind == "star":
        g, t = packing.tightness_star_instance(a)
    else:
        g, t = packing.tightness_spider_instance(a, b)
    packs = packing.exact_pack(g, t) is not None
    _emit(
        args,
        f"{to_graph6(g)} {to_graph6(t)}\npacks: {packs}",
        {"kind": args.kind, "host": to_graph6(g), "tree": to_graph6(t), "packs": packs},
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    params = {"budget": args.node_budget, "jobs": args.jobs}
    if args.nmax is not None:
        params["nmax"] = args.nmax
    rep = verify.verify_theorem(args.suite, **params)
    lines = [f"{'PASS' if p.passed else 'FAIL'} {p.label} ({p.checked} checked)" for p in rep.points]
    for p in rep.points:
        lines.extend(f"  {p.label}: {f}" for f in p.failures if not p.passed)
    lines.append(f"{rep.suite}: {'pass' if rep.passed else 'incomplete' if rep.incomplete else 'fail'}")
    _emit(args, "\n".join(lines), rep.to_json())
    if rep.incomplete:
        return EXIT_RESOURCE
    return EXIT_OK if rep.passed else EXIT_FALSE


def cmd_enumerate(args) -> int:
    if args.what == "sequences":
        items = [str(s) for s in degseq.enumerate_graphic_sequences(args.n)]
    elif args.what == "trees":
        items = [to_graph6(t) for t in enumerate_trees(args.n)]
    else:
        items = [to_graph6(g) for g in enumerate_graphs(args.n)]
    if args.format == "json":
        print(json.dumps({"items": items}, indent=2))
    else:
        for item in items:
            print(item)
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--node-budget", type=int, default=DEFAULT_NODE_BUDGET,
                        help="max realization classes visited per search")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="potram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graphic", parents=[common], help="test graphicality")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_graphic)

    p = sub.add_parser("realize", parents=[common], help="Havel-Hakimi realization")
    p.add_argument("sequence")
    p.add_argument("--output", choices=("edgelist", "graph6"), default="edgelist")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("complement", parents=[common], help="complement sequence (or graph with --graph)")
    p.add_argument("value")
    p.add_argument("--graph", action="store_true")
    p.set_defaults(func=cmd_complement)

    p = sub.add_parser("potential", parents=[common], help="potentially H-graphic decisions")
    p.add_argument("sequence")
    p.add_argument("target", nargs="?")
    p.add_argument("--check", default="exact",
                   choices=("exact", "top-degree", "clique-sufficient", "tree-sufficient", "star", "degree-bounds"))
    p.add_argument("-k", type=int)
    p.add_argument("-t", type=int)
    p.add_argument("--no-fast", action="store_true", help="skip degree-condition shortcuts")
    p.set_defaults(func=cmd_potential)

    p = sub.add_parser("pack", parents=[common], help="pack a guest graph with a host graph")
    p.add_argument("host")
    p.add_argument("guest")
    p.add_argument("--method", choices=("exact", "linkswap", "auto"), default="auto")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("rpot", parents=[common], help="exact potential-Ramsey number")
    p.add_argument("--h1", required=True)
    p.add_argument("--h2", required=True)
    p.add_argument("--nmax", type=int, default=degseq.SEQUENCE_BOUND)
    p.set_defaults(func=cmd_rpot)

    p = sub.add_parser("witness", parents=[common], help="lower-bound and tightness instances")
    p.add_argument("params", type=int, nargs="+", metavar="INT",
                   help="lower: s t; star: n; spider: m r")
    p.add_argument("--kind", choices=("lower", "star", "spider"), default="lower")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--nmax", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", parents=[common], help="stream sequences, trees or graphs")
    p.add_argument("what", choices=("sequences", "trees", "graphs"))
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
