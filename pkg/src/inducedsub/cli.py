"""Command-line front end.

Exit codes: 0 when the answer is positive (found, valid, classified), 1 when
it is negative, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .digraph import Digraph
from .formats import FormatError, dump_json, emit_dot, emit_edge_list, read_dimacs, read_edge_list, write_edge_list
from .generate import random_digraph, random_oriented
from .oracle import DidppInstance, oracle_find_subdivision, search_subdivision
from .patterns import PatternError, detect, parse_pattern
from .reductions import (
    build_G1,
    build_G1_prime,
    build_G1_star,
    build_G2,
    build_G2_D,
    build_G2_k,
    build_G3,
    build_G3_C,
    build_G3_L,
    build_G4,
    build_G4_k,
    build_G4_prime,
    build_G5,
    build_G5_star,
    classify_pattern,
    compose_component,
    reduce_didpp_to_two_cycles,
)
from .witness import Witness, witness_problems

OK, NO, ERR = 0, 1, 2


class UsageError(Exception):
    pass


def _load_graph(path: str | None) -> Digraph:
    if path is None:
        raise UsageError("--input is required")
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _pattern(text: str | None):
    if text is None:
        raise UsageError("--pattern is required")
    return parse_pattern(text)


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(dump_json(data))
    else:
        for line in lines:
            print(line)


def _witness_lines(g: Digraph, w: Witness) -> list[str]:
    out = ["vertices: " + " ".join(g.label(v) for v in sorted(w.vertices))]
    for a, v in sorted(w.node_map.items()):
        out.append(f"node {a} -> {g.label(v)}")
    for (a, b), path in sorted(w.branches.items()):
        out.append(f"branch {a}->{b}: " + " ".join(g.label(v) for v in path))
    return out


def _pattern_json(d: Digraph) -> dict:
    return {"n": d.n, "arcs": [list(a) for a in d.sorted_arcs()]}


def _write_dot(args, g: Digraph, w: Witness | None) -> None:
    if args.dot:
        Path(args.dot).write_text(emit_dot(g, () if w is None else w.vertices), encoding="utf-8")


def cmd_detect(args) -> int:
    g = _load_graph(args.input)
    spec = _pattern(args.pattern)
    res = detect(g, spec, root=args.root, max_oracle_n=args.max_oracle_n)
    data = {
        "command": "detect",
        "pattern": spec.name,
        "kind": spec.kind,
        "found": res.found,
        "method": res.method,
        "pattern_graph": _pattern_json(res.pattern),
        "witness": None if res.witness is None else res.witness.to_json(),
    }
    lines = [f"{'found' if res.found else 'not found'} ({res.method})"]
    if res.found:
        lines += _witness_lines(g, res.witness)
    _emit(args, data, lines)
    _write_dot(args, g, res.witness)
    return OK if res.found else NO


def cmd_oracle(args) -> int:
    g = _load_graph(args.input)
    spec = _pattern(args.pattern)
    fixed = None if args.root is None else {0: args.root}
    if args.root is not None and not 0 <= args.root < g.n:
        raise UsageError(f"root {args.root} is not a vertex")
    if g.n <= args.max_oracle_n:
        w, method = oracle_find_subdivision(g, spec.digraph, max_n=args.max_oracle_n, fixed=fixed), "subset-oracle"
    else:
        w, method = search_subdivision(g, spec.digraph, fixed=fixed), "routing-oracle"
    data = {
        "command": "oracle",
        "pattern": spec.name,
        "found": w is not None,
        "method": method,
        "pattern_graph": _pattern_json(spec.digraph),
        "witness": None if w is None else w.to_json(),
    }
    lines = [f"{'found' if w is not None else 'not found'} ({method})"]
    if w is not None:
        lines += _witness_lines(g, w)
    _emit(args, data, lines)
    _write_dot(args, g, w)
    return OK if w is not None else NO


def cmd_verify(args) -> int:
    g = _load_graph(args.input)
    if args.witness is None:
        raise UsageError("--witness is required")
    try:
        data = json.loads(Path(args.witness).read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {args.witness}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.witness}: invalid JSON ({exc.msg})") from None
    # accept either the output of detect/oracle or a bare witness object
    if isinstance(data, dict) and "witness" in data:
        if data["witness"] is None:
            raise UsageError("witness file records a negative answer")
        pg = data.get("pattern_graph")
        d = Digraph(pg["n"], [tuple(a) for a in pg["arcs"]]) if pg else _pattern(args.pattern).digraph
        data = data["witness"]
    else:
        d = _pattern(args.pattern).digraph
    try:
        w = Witness.from_json(data)
    except (KeyError, TypeError, ValueError, IndexError):
        raise UsageError("malformed witness object") from None
    problems = witness_problems(g, d, w)
    _emit(args, {"command": "verify", "valid": not problems, "problems": problems},
          ["valid"] if not problems else ["invalid"] + [f"  {p}" for p in problems])
    return NO if problems else OK


def cmd_classify(args) -> int:
    spec = _pattern(args.pattern)
    c = classify_pattern(spec.digraph)
    _emit(args, {"command": "classify", "pattern": spec.name, **c.to_json()}, [str(c)])
    return NO if c.kind == "Unknown" else OK


def _need_cnf(args):
    if args.cnf is None:
        raise UsageError("--cnf is required for this family")
    try:
        return read_dimacs(args.cnf)
    except OSError as exc:
        raise UsageError(f"cannot read {args.cnf}: {exc.strerror}") from None


def _need_k(args, default=None):
    if args.k is None and default is None:
        raise UsageError("--k is required for this family")
    return default if args.k is None else args.k


def _terminals(args, g: Digraph) -> tuple[int, int, int, int]:
    if args.terminals is None:
        raise UsageError("--terminals s1,t1,s2,t2 is required")
    try:
        terms = tuple(int(t) for t in args.terminals.split(","))
    except ValueError:
        raise UsageError("--terminals must be four integers") from None
    if len(terms) != 4:
        raise UsageError("--terminals must be four integers")
    return terms


def _build(args):
    fam = (args.family or "").lower()
    if not fam:
        raise UsageError("--family is required")
    simple = {"g1": build_G1, "g1star": build_G1_star, "g2": build_G2, "g3": build_G3, "g3l": build_G3_L,
              "g3c": build_G3_C, "g4": build_G4, "g5": build_G5, "g5star": build_G5_star}
    if fam in simple:
        f = _need_cnf(args)
        if fam == "g1star" and args.k not in (None, 4):
            raise UsageError("g1star encodes C4; --k must be 4 if given")
        return simple[fam](f)
    if fam == "g2k":
        return build_G2_k(_need_cnf(args), _need_k(args))
    if fam == "g4k":
        return build_G4_k(_need_cnf(args), _need_k(args))
    if fam in ("g1prime", "g2d", "g4prime"):
        d = _pattern(args.pattern).digraph
        builder = {"g1prime": build_G1_prime, "g2d": build_G2_D, "g4prime": build_G4_prime}[fam]
        return builder(d, _need_cnf(args))
    if fam == "didpp2c":
        g = _load_graph(args.input)
        return reduce_didpp_to_two_cycles(DidppInstance(g, *_terminals(args, g)))
    raise UsageError(f"unknown family {args.family!r}")


def cmd_reduce(args) -> int:
    if (args.family or "").lower() == "compose":
        d = _pattern(args.pattern).digraph
        g1 = _load_graph(args.input)
        g = compose_component(d, _need_k(args, 0), g1)
        sidecar = {"family": "Compose", "n": g.n, "m": g.m, "component": _need_k(args, 0)}
    else:
        out = _build(args)
        g, sidecar = out.graph, out.sidecar()
        if out.pattern is not None:
            sidecar["pattern_graph"] = _pattern_json(out.pattern)
    if args.output:
        write_edge_list(g, args.output)
        Path(args.output).with_suffix(".json").write_text(dump_json(sidecar), encoding="utf-8")
        _emit(args, {"command": "reduce", **sidecar}, [f"wrote {args.output} ({g.n} vertices, {g.m} arcs)"])
    elif args.json:
        sys.stdout.write(dump_json({"command": "reduce", **sidecar, "edge_list": emit_edge_list(g)}))
    else:
        sys.stdout.write(emit_edge_list(g))
    _write_dot(args, g, None)
    return OK


def cmd_gen_random(args) -> int:
    if args.n is None or args.n < 0:
        raise UsageError("--n must be a nonnegative integer")
    if not 0.0 <= args.p <= 1.0:
        raise UsageError("--p must lie in [0, 1]")
    make = random_oriented if args.oriented else random_digraph
    g = make(args.n, args.p, args.seed)
    if args.output:
        write_edge_list(g, args.output)
    else:
        sys.stdout.write(emit_edge_list(g))
    return OK


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    results = run_all(quick=args.quick, stream=sys.stdout if not args.json else None)
    if args.json:
        sys.stdout.write(dump_json({"command": "selftest", "criteria": [r.to_json() for r in results]}))
    return OK if all(r.passed for r in results) else NO


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="edge-list file")
    common.add_argument("--pattern", help="pattern name or edge-list file")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--dot", help="also write the graph (witness highlighted) in DOT format")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--root", type=int, help="pin pattern vertex 0 to this host vertex")
    search.add_argument("--max-oracle-n", type=int, default=16, help="largest host for the subset oracle")

    p = argparse.ArgumentParser(prog="inducedsub", description="Detect induced subdivisions in digraphs.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("detect", parents=[common, search], help="run the best detector for a pattern").set_defaults(run=cmd_detect)
    sub.add_parser("oracle", parents=[common, search], help="run an exact oracle").set_defaults(run=cmd_oracle)
    v = sub.add_parser("verify", parents=[common], help="check a witness JSON file")
    v.add_argument("--witness", help="witness JSON (detect/oracle output or bare witness)")
    v.set_defaults(run=cmd_verify)
    sub.add_parser("classify", parents=[common], help="complexity class of a pattern").set_defaults(run=cmd_classify)

    r = sub.add_parser("reduce", parents=[common], help="generate a reduction gadget")
    r.add_argument("--family", help="g1, g1star, g1prime, g2, g2k, g2d, g3, g3l, g3c, g4, g4k, g4prime, g5, g5star, didpp2c, compose")
    r.add_argument("--cnf", help="DIMACS 3-CNF file")
    r.add_argument("--k", type=int, help="cycle/tournament size, or component index for compose")
    r.add_argument("--terminals", help="s1,t1,s2,t2 for didpp2c")
    r.add_argument("--output", help="edge-list path; the sidecar goes next to it with a .json suffix")
    r.set_defaults(run=cmd_reduce)

    g = sub.add_parser("gen-random", parents=[common], help="random digraph as an edge list")
    g.add_argument("--n", type=int, help="number of vertices")
    g.add_argument("--p", type=float, default=0.3, help="arc probability")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--oriented", action="store_true", help="orient each pair at most once")
    g.add_argument("--output", help="edge-list path (default stdout)")
    g.set_defaults(run=cmd_gen_random)

    s = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    s.add_argument("--quick", action="store_true", help="smaller samples")
    s.set_defaults(run=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return ERR if exc.code not in (0, None) else OK
    try:
        return args.run(args)
    except (UsageError, PatternError, FormatError, ValueError, IndexError) as exc:
        print(f"inducedsub {args.command}: error: {exc}", file=sys.stderr)
        return ERR


if __name__ == "__main__":
    sys.exit(main())
