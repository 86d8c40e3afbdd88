"""The acceptance suite: eight property checks against exact oracles.

Each ``criterion_*`` function returns a :class:`CriterionResult`.  ``quick``
shrinks sample sizes for interactive use; the full sizes are the defaults.
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import random
import tempfile
import time
from dataclasses import dataclass, field
from typing import Callable, TextIO

import jsonschema

from .basic import detect_C2_subdivision, detect_C3_oriented, detect_Pk, detect_spider_forest
from .digraph import Digraph, disjoint_union, is_acyclic, is_oriented, iter_chordless_cycles
from .families import (
    antidirected,
    directed_cycle,
    directed_path,
    spider,
    tiny_cherry,
    transitive_tournament,
)
from .formats import emit_dimacs, emit_edge_list, parse_dimacs, parse_edge_list
from .generate import iso_classes, random_didpp, random_digraph, random_oriented
from .ibfs import cherry_or_obstruction, obstruction_holds
from .oracle import DidppInstance, oracle_find_subdivision, search_subdivision, solve_didpp, solve_induced_ab_path
from .patterns import detect, parse_pattern
from .paths import detect_A2_rooted
from .reductions import (
    build_G1,
    build_G1_star,
    build_G2,
    build_G2_D,
    build_G2_k,
    build_G3_L,
    build_G4,
    build_G4_k,
    build_G4_prime,
    build_G5,
    build_G5_star,
    is_good_converse_switch,
    is_good_switch,
    reduce_didpp_to_two_cycles,
)
from .sat import CnfFormula, exhaustive_formulas, random_formula, solve_sat
from .witness import verify_witness


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"criterion {self.number} {status} [{self.seconds:.1f}s] {self.title}: {self.detail}"

    def to_json(self) -> dict:
        return {
            "number": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
            "failures": self.failures[:20],
        }


class _Tally:
    """Counts checks and keeps the first few failure descriptions."""

    def __init__(self):
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, what: Callable[[], str] | str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(what() if callable(what) else what)

    @property
    def ok(self) -> bool:
        return not self.failures


def _result(number, title, tally: _Tally, t0: float, detail: str = "") -> CriterionResult:
    summary = f"{tally.checks} checks, {len(tally.failures)} failures"
    if detail:
        summary += f"; {detail}"
    return CriterionResult(number, title, tally.ok, summary, time.perf_counter() - t0, tally.failures)


SPIDER_SAMPLES = (
    spider([1, -1]),
    spider([2, -1]),
    spider([1, 1, -1]),
    disjoint_union(spider([1]), spider([-1])),
)


def criterion_1(quick: bool = False) -> CriterionResult:
    """Detectors agree with the subset oracle on every digraph with at most five vertices."""
    t0 = time.perf_counter()
    tally = _Tally()
    hosts = [g for n in range(1, 5 if quick else 6) for g in iso_classes(n)]
    checks = [
        ("P2", directed_path(2), lambda g: detect_Pk(g, 2)),
        ("P3", directed_path(3), lambda g: detect_Pk(g, 3)),
        ("P4", directed_path(4), lambda g: detect_Pk(g, 4)),
        ("C2", directed_cycle(2), detect_C2_subdivision),
        ("C3", directed_cycle(3), lambda g: detect_C3_oriented(g) if is_oriented(g) else None),
    ]
    checks += [(f"spider{i}", s, lambda g, s=s: detect_spider_forest(g, s)) for i, s in enumerate(SPIDER_SAMPLES)]
    for g in hosts:
        for name, d, run in checks:
            if name == "C3" and not is_oriented(g):
                continue
            w = run(g)
            o = oracle_find_subdivision(g, d)
            tally.check((w is None) == (o is None), lambda: f"{name} on {g.sorted_arcs()}")
            if w is not None:
                tally.check(verify_witness(g, d, w), lambda: f"{name} witness on {g.sorted_arcs()}")
    return _result(1, "detector/oracle equivalence, all digraphs n<=5", tally, t0, f"{len(hosts)} hosts")


CRITERION_2_PATTERNS = (
    ("cherry", "tt:3"),
    ("A-3", "a-:3"),
    ("A-4", "a-:4"),
    ("(1,1,1)", "shape:+1,1,1"),
    ("(2,1,1)", "shape:-2,1,1"),
    ("(1,1,1,1)", "shape:+1,1,1,1"),
    ("(2,2,1,1)", "shape:-2,2,1,1"),
)


def criterion_2(quick: bool = False, seed: int = 2) -> CriterionResult:
    """Polynomial path and cherry detectors against the oracle on random oriented graphs."""
    t0 = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    specs = [(name, parse_pattern(text)) for name, text in CRITERION_2_PATTERNS]
    found = {name: 0 for name, _ in specs}
    for i in range(100 if quick else 1000):
        n = rng.choice((8, 9))
        p = (0.2, 0.5)[i % 2]
        g = random_oriented(n, p, rng)
        for name, spec in specs:
            res = detect(g, spec)
            tally.check("oracle" not in res.method, f"{name} fell back to {res.method}")
            o = oracle_find_subdivision(g, spec.digraph)
            found[name] += res.found
            tally.check(res.found == (o is not None), lambda: f"{name} on n={n} {g.sorted_arcs()}")
            if res.found:
                tally.check(verify_witness(g, res.pattern, res.witness), lambda: f"{name} witness {g.sorted_arcs()}")
    detail = "positives " + ", ".join(f"{k}={v}" for k, v in found.items())
    return _result(2, "detector/oracle equivalence, random oriented n=8-9", tally, t0, detail)


def criterion_3(quick: bool = False, seed: int = 3) -> CriterionResult:
    """IBFS dichotomy: a valid cherry or the obstruction, never both, never neither."""
    t0 = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    cherries = obstructions = 0
    for n in range(1, 5 if quick else 6):
        for g in iso_classes(n, oriented=True):
            for s in range(n):
                # a cherry rooted at s is a TT3 with source s or a tiny cherry with stem origin s
                exists = (oracle_find_subdivision(g, transitive_tournament(3), fixed={0: s}) is not None
                          or oracle_find_subdivision(g, tiny_cherry(1), fixed={0: s}) is not None)
                for _ in range(3):
                    rank = list(range(n))
                    rng.shuffle(rank)
                    tree, c = cherry_or_obstruction(g, s, rank)
                    obstructed = obstruction_holds(g, tree)
                    label = lambda: f"root {s} rank {rank} on {g.sorted_arcs()}"
                    tally.check((c is not None) != obstructed, label)
                    tally.check((c is not None) == exists, label)
                    if c is not None:
                        cherries += 1
                        tally.check(c.s == s and not c.problems(g), label)
                    else:
                        obstructions += 1
    detail = f"{cherries} cherries, {obstructions} obstructions"
    return _result(3, "IBFS dichotomy, all oriented graphs n<=5", tally, t0, detail)


def reduction_formulas(n_random: int = 20, seed: int = 1) -> list[CnfFormula]:
    """The exhaustive n<=2, m<=2 family, one extra unsatisfiable formula, and random n=m=3 formulas."""
    out = exhaustive_formulas(2, 2)
    out.append(CnfFormula(2, ((1, 1, 2), (1, 1, -2), (-1, -1, 2), (-1, -1, -2))))
    rng = random.Random(seed)
    out += [random_formula(3, 3, rng) for _ in range(n_random)]
    return out


def _ab_path(out) -> bool:
    return solve_induced_ab_path(out.graph, out["a"], out["b"]) is not None


def _full_pattern(out) -> bool:
    w = search_subdivision(out.graph, out.pattern)
    if w is not None and not verify_witness(out.graph, out.pattern, w):
        raise AssertionError(f"{out.family}: oracle produced an invalid witness")
    return w is not None


def _g5_didpp(f: CnfFormula) -> bool:
    out = build_G5_star(f)
    g5 = build_G5(f)
    # G5* adds only the four terminal arcs; the path pair lives in G5
    inst = DidppInstance(g5.graph, g5["a"], g5["b"], g5["c"], g5["d"])
    assert out.graph.n == g5.graph.n
    return solve_didpp(inst) is not None


ROUND_TRIPS = (
    ("G1", "induced (a,b)-path", lambda f: _ab_path(build_G1(f))),
    ("G1*", "C4 oracle", lambda f: _full_pattern(build_G1_star(f))),
    ("G2", "induced (a,b)-path", lambda f: _ab_path(build_G2(f))),
    ("G2^3", "C3 oracle", lambda f: _full_pattern(build_G2_k(f, 3))),
    ("G2^4", "C4 oracle", lambda f: _full_pattern(build_G2_k(f, 4))),
    ("G2^D", "A-3 oracle", lambda f: _full_pattern(build_G2_D(antidirected(3, -1), f))),
    ("G3^L", "lollipop oracle", lambda f: _full_pattern(build_G3_L(f))),
    ("G4", "induced (a,b)-path", lambda f: _ab_path(build_G4(f))),
    ("G4^4", "TT4 oracle", lambda f: _full_pattern(build_G4_k(f, 4))),
    ("G4'", "TT4 oracle", lambda f: _full_pattern(build_G4_prime(transitive_tournament(4), f))),
    ("G5*", "disjoint induced path pair", _g5_didpp),
)


def criterion_4(quick: bool = False, seed: int = 4) -> CriterionResult:
    """SAT iff the encoded object exists, for every generator."""
    t0 = time.perf_counter()
    tally = _Tally()
    formulas = reduction_formulas(5 if quick else 20)
    if quick:
        formulas = formulas[::8] + formulas[-5:]
    for f in formulas:
        sat = solve_sat(f) is not None
        for name, target, run in ROUND_TRIPS:
            tally.check(run(f) == sat, lambda: f"{name} ({target}) on {f.clauses}")
    rng = random.Random(seed)
    yes = 0
    for i in range(30 if quick else 90):
        inst = random_didpp(rng.randint(5, 12), (0.1, 0.2, 0.35)[i % 3], rng, plant=i % 2 == 0)
        answer = solve_didpp(inst) is not None
        yes += answer
        out = reduce_didpp_to_two_cycles(inst)
        w = oracle_find_subdivision(out.graph, out.pattern)
        tally.check((w is not None) == answer, lambda: f"DIDPP->C3+C3 on {inst}")
    detail = f"{len(formulas)} formulas x {len(ROUND_TRIPS)} generators, DIDPP yes={yes}"
    return _result(4, "reduction round trips", tally, t0, detail)


def criterion_5(quick: bool = False) -> CriterionResult:
    """Structural invariants of every generated gadget."""
    t0 = time.perf_counter()
    tally = _Tally()
    formulas = reduction_formulas(5 if quick else 20)
    for f in formulas:
        g2 = build_G2(f).graph
        tally.check(next(iter_chordless_cycles(g2, 3), None) is None, lambda: f"G2 induced cycle on {f.clauses}")

        o = build_G1_star(f)
        ba = (o["b"], o["a"])
        for c in iter_chordless_cycles(o.graph, 4):
            arcs = set(zip(c, c[1:] + c[:1]))
            tally.check(ba in arcs, lambda: f"G1* cycle {c} avoids ba on {f.clauses}")

        g4 = build_G4(f).graph
        top = max(max(g4.in_degree(v), g4.out_degree(v)) for v in range(g4.n))
        tally.check(top == 2, lambda: f"G4 max degree {top} on {f.clauses}")

        o = build_G5_star(f)
        tally.check(is_acyclic(o.graph.with_arcs(remove=[(o["d"], o["a"])])), lambda: f"G5* - da cyclic on {f.clauses}")
        g5 = build_G5(f)
        for out in (o, g5):
            for s in out.switches:
                tally.check(is_good_switch(out.graph, s), lambda: f"{out.family} switch {s} on {f.clauses}")
            for s in out.converse_switches:
                tally.check(is_good_converse_switch(out.graph, s), lambda: f"{out.family} converse switch {s}")
    return _result(5, "gadget structural invariants", tally, t0, f"{len(formulas)} formulas")


def _time(fn, reps: int = 5) -> float:
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def criterion_6(quick: bool = False, bound: float = 5.5) -> CriterionResult:
    """Loose scaling regressions for IBFS and the rooted A+2 detector."""
    t0 = time.perf_counter()
    tally = _Tally()
    roots = range(10)
    ibfs_times = []
    for n in (200, 400, 800):
        g = random_oriented(n, 0.05, n)
        ibfs_times.append(_time(lambda: [cherry_or_obstruction(g, s) for s in roots]))
    a2_times = []
    for m in (2000, 4000):
        n = 400
        g = random_oriented(n, m / (n * (n - 1) / 2), m)
        a2_times.append(_time(lambda: [detect_A2_rooted(g, s) for s in roots]))
    ratios = [b / a for a, b in zip(ibfs_times, ibfs_times[1:])] + [a2_times[1] / a2_times[0]]
    for r in ratios:
        tally.check(r <= bound, f"ratio {r:.2f} exceeds {bound}")
    detail = "ratios IBFS " + ", ".join(f"{r:.2f}" for r in ratios[:2]) + f"; A+2 {ratios[2]:.2f}"
    return _result(6, "complexity smoke tests", tally, t0, detail)


FUZZ_PATTERNS = (
    "pk:2", "pk:3", "pk:5", "c2", "c:3", "c:4", "tt:3", "cherry", "tiny-cherry:1", "tiny-cherry:2",
    "a+:2", "a-:2", "a+:3", "a-:3", "a+:4", "a-:4", "shape:-2,1,1", "shape:+1,3,1",
    "shape:-2,2,1,1", "shape:+1,1,2", "st4", "lollipop", "cone",
)


def criterion_7(quick: bool = False, seed: int = 7) -> CriterionResult:
    """Fuzz: every witness returned by a detector or oracle verifies."""
    t0 = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    specs = [parse_pattern(t) for t in FUZZ_PATTERNS]
    specs += [_explicit(s) for s in SPIDER_SAMPLES]
    specs.append(_explicit(disjoint_union(spider([1, -1]), directed_cycle(2))))
    specs.append(_explicit(disjoint_union(spider([1]), directed_cycle(3))))
    positives = 0
    for _ in range(1000 if quick else 10_000):
        oriented = rng.random() < 0.7
        n = rng.randint(2, 11)
        g = (random_oriented if oriented else random_digraph)(n, rng.uniform(0.1, 0.6), rng)
        spec = rng.choice(specs)
        root = rng.randrange(n) if rng.random() < 0.2 else None
        res = detect(g, spec, root=root)
        if res.found:
            positives += 1
            tally.check(verify_witness(g, res.pattern, res.witness),
                        lambda: f"{spec.name} root={root} via {res.method} on {g.sorted_arcs()}")
            if root is not None:
                tally.check(res.witness.node_map[0] == root, lambda: f"{spec.name} ignored root {root}")
        else:
            tally.checks += 1
    return _result(7, "witness soundness fuzz", tally, t0, f"{positives} witnesses verified")


def _explicit(d: Digraph):
    from .patterns import classify_explicit

    return classify_explicit(d, "explicit")


DETECT_SCHEMA = {
    "type": "object",
    "required": ["command", "pattern", "kind", "found", "method", "pattern_graph", "witness"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "detect"},
        "pattern": {"type": "string"},
        "kind": {"type": "string"},
        "found": {"type": "boolean"},
        "method": {"type": "string"},
        "pattern_graph": {"$ref": "#/$defs/graph"},
        "witness": {"oneOf": [{"type": "null"}, {"$ref": "#/$defs/witness"}]},
    },
    "$defs": {
        "graph": {
            "type": "object",
            "required": ["n", "arcs"],
            "properties": {
                "n": {"type": "integer", "minimum": 0},
                "arcs": {"type": "array", "items": {"type": "array", "items": {"type": "integer"}, "minItems": 2, "maxItems": 2}},
            },
        },
        "witness": {
            "type": "object",
            "required": ["vertices", "node_map", "branches"],
            "properties": {
                "vertices": {"type": "array", "items": {"type": "integer"}},
                "node_map": {"type": "object", "additionalProperties": {"type": "integer"}},
                "branches": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["arc", "path"],
                        "properties": {
                            "arc": {"type": "array", "items": {"type": "integer"}},
                            "path": {"type": "array", "items": {"type": "integer"}, "minItems": 2},
                        },
                    },
                },
            },
        },
    },
}

ORACLE_SCHEMA = {
    **DETECT_SCHEMA,
    "required": ["command", "pattern", "found", "method", "pattern_graph", "witness"],
    "properties": {**{k: v for k, v in DETECT_SCHEMA["properties"].items() if k != "kind"}, "command": {"const": "oracle"}},
}

VERIFY_SCHEMA = {
    "type": "object",
    "required": ["command", "valid", "problems"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "verify"},
        "valid": {"type": "boolean"},
        "problems": {"type": "array", "items": {"type": "string"}},
    },
}

CLASSIFY_SCHEMA = {
    "type": "object",
    "required": ["command", "pattern", "kind", "reason"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "classify"},
        "pattern": {"type": "string"},
        "kind": {"enum": ["PolySpiders", "PolySpidersPlusC2", "NPC", "Unknown"]},
        "reason": {"type": "string"},
    },
}

REDUCE_SCHEMA = {
    "type": "object",
    "required": ["command", "family", "n", "m", "specials", "source"],
    "properties": {
        "command": {"const": "reduce"},
        "family": {"type": "string"},
        "n": {"type": "integer"},
        "m": {"type": "integer"},
        "specials": {"type": "object", "additionalProperties": {"type": "integer"}},
        "pattern_graph": {"$ref": "#/$defs/graph"},
    },
    "$defs": DETECT_SCHEMA["$defs"],
}


def _run_cli(argv: list[str]) -> tuple[int, str]:
    from .cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf), contextlib.redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, buf.getvalue()


def _cli_checks(tally: _Tally, rng: random.Random, quick: bool) -> None:
    with tempfile.TemporaryDirectory() as tmp:
        cnf = os.path.join(tmp, "f.cnf")
        with open(cnf, "w", encoding="utf-8") as fh:
            fh.write(emit_dimacs(CnfFormula(2, ((1, 2, 2), (-1, -2, -2)))))
        host = os.path.join(tmp, "g.elist")
        patterns = ("tt:3", "a-:3", "c2", "pk:3", "st4", "shape:-2,1,1")
        for i in range(5 if quick else 20):
            g = random_oriented(rng.randint(4, 9), 0.4, rng)
            with open(host, "w", encoding="utf-8") as fh:
                fh.write(emit_edge_list(g))
            for pat in patterns:
                for cmd, schema in (("detect", DETECT_SCHEMA), ("oracle", ORACLE_SCHEMA)):
                    code, out = _run_cli([cmd, "--input", host, "--pattern", pat, "--json"])
                    again = _run_cli([cmd, "--input", host, "--pattern", pat, "--json"])
                    tally.check(again == (code, out), f"{cmd} output not deterministic")
                    data = _schema_ok(tally, out, schema, cmd)
                    if data is None:
                        continue
                    tally.check(code == (0 if data["found"] else 1), f"{cmd} exit code {code}")
                    if data["found"]:
                        wfile = os.path.join(tmp, "w.json")
                        with open(wfile, "w", encoding="utf-8") as fh:
                            fh.write(out)
                        vcode, vout = _run_cli(["verify", "--input", host, "--witness", wfile, "--json"])
                        vdata = _schema_ok(tally, vout, VERIFY_SCHEMA, "verify")
                        tally.check(vcode == 0 and vdata is not None and vdata["valid"], f"{cmd} {pat} output does not verify")
        for pat in ("c:3", "pk:4", "lollipop", "st4", "c2"):
            code, out = _run_cli(["classify", "--pattern", pat, "--json"])
            _schema_ok(tally, out, CLASSIFY_SCHEMA, "classify")
        for fam, extra in (("g1", []), ("g1star", ["--k", "4"]), ("g2k", ["--k", "3"]), ("g5star", [])):
            code, out = _run_cli(["reduce", "--family", fam, "--cnf", cnf, "--json", *extra])
            tally.check(code == 0, f"reduce {fam} exit {code}")
            data = _schema_ok(tally, out, REDUCE_SCHEMA, "reduce")
            if data is not None:
                tally.check(parse_edge_list(data["edge_list"]).n == data["n"], f"reduce {fam} edge list")
        code, _ = _run_cli(["detect", "--input", os.path.join(tmp, "missing"), "--pattern", "c2"])
        tally.check(code == 2, f"missing input gave exit {code}")
        with open(host, "w", encoding="utf-8") as fh:
            fh.write("3\n0 x\n")
        code, _ = _run_cli(["detect", "--input", host, "--pattern", "c2"])
        tally.check(code == 2, f"malformed input gave exit {code}")


def _schema_ok(tally: _Tally, text: str, schema: dict, what: str):
    try:
        data = json.loads(text)
        jsonschema.validate(data, schema)
    except (json.JSONDecodeError, jsonschema.ValidationError) as exc:
        tally.check(False, f"{what} JSON: {str(exc).splitlines()[0]}")
        return None
    tally.check(True, "")
    return data


def criterion_8(quick: bool = False, seed: int = 8) -> CriterionResult:
    """Edge-list and DIMACS round trips, and schema-stable CLI JSON."""
    t0 = time.perf_counter()
    tally = _Tally()
    rng = random.Random(seed)
    for i in range(100):
        g = (random_digraph if i % 2 else random_oriented)(rng.randint(0, 30), rng.random(), rng)
        text = emit_edge_list(g)
        back = parse_edge_list(text)
        tally.check(back == g and emit_edge_list(back) == text, f"edge list round trip, graph {i}")
    gadgets = 0
    formulas = reduction_formulas(5 if quick else 20)
    for f in formulas:
        tally.check(parse_dimacs(emit_dimacs(f)) == f, f"DIMACS round trip {f.clauses}")
        builders = (build_G1, build_G1_star, build_G2, build_G3_L, build_G4, build_G5, build_G5_star,
                    lambda f: build_G2_k(f, 4), lambda f: build_G4_k(f, 4),
                    lambda f: build_G2_D(antidirected(3, -1), f),
                    lambda f: build_G4_prime(transitive_tournament(4), f))
        for build in builders:
            g = build(f).graph
            text = emit_edge_list(g)
            back = parse_edge_list(text)
            gadgets += 1
            tally.check(back == g and back.labels == g.labels and emit_edge_list(back) == text,
                        f"gadget round trip on {f.clauses}")
    _cli_checks(tally, rng, quick)
    return _result(8, "format round trips and CLI JSON schema", tally, t0, f"{gadgets} gadget graphs")


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8)


def run_all(quick: bool = False, stream: TextIO | None = None) -> list[CriterionResult]:
    results = []
    for crit in CRITERIA:
        r = crit(quick=quick)
        results.append(r)
        if stream is not None:
            print(r.line(), file=stream, flush=True)
    return results
