"""Edge-list, DIMACS CNF, JSON sidecar and DOT formats."""

from __future__ import annotations

import json
from typing import Iterable, TextIO

from .digraph import Digraph
from .sat import CnfFormula


class FormatError(ValueError):
    pass


def emit_edge_list(g: Digraph) -> str:
    """Canonical edge list: ``n``, sorted label comments, sorted arcs."""
    lines = [str(g.n)]
    lines += [f"# label {v} {g.labels[v]}" for v in sorted(g.labels)]
    lines += [f"{u} {v}" for u, v in g.sorted_arcs()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Digraph:
    n = None
    arcs = []
    labels = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split(None, 2)
            if parts and parts[0] == "label":
                if len(parts) != 3:
                    raise FormatError(f"line {lineno}: malformed label line")
                v, name = _int(parts[1], lineno), parts[2]
                if not name or any(c.isspace() for c in name):
                    raise FormatError(f"line {lineno}: labels may not contain whitespace")
                labels[v] = name
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise FormatError(f"line {lineno}: expected vertex count")
            n = _int(fields[0], lineno)
            if n < 0:
                raise FormatError(f"line {lineno}: negative vertex count")
            continue
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v'")
        arcs.append((_int(fields[0], lineno), _int(fields[1], lineno)))
    if n is None:
        raise FormatError("missing vertex count")
    try:
        return Digraph(n, arcs, labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: not an integer: {tok!r}") from None


def read_edge_list(path) -> Digraph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(emit_edge_list(g))


def emit_dimacs(f: CnfFormula) -> str:
    lines = [f"p cnf {f.num_vars} {f.num_clauses}"]
    lines += [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    header = None
    clauses = []
    pending: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            fields = line.split()
            if len(fields) != 4 or fields[1] != "cnf":
                raise FormatError(f"line {lineno}: malformed header")
            header = (_int(fields[2], lineno), _int(fields[3], lineno))
            continue
        if header is None:
            raise FormatError(f"line {lineno}: clause before header")
        for tok in line.split():
            lit = _int(tok, lineno)
            if lit == 0:
                if len(pending) != 3:
                    raise FormatError(f"line {lineno}: clause must have exactly three literals")
                clauses.append(tuple(pending))
                pending = []
            else:
                pending.append(lit)
    if header is None:
        raise FormatError("missing 'p cnf' header")
    if pending:
        raise FormatError("unterminated clause")
    if len(clauses) != header[1]:
        raise FormatError(f"header announces {header[1]} clauses, found {len(clauses)}")
    try:
        return CnfFormula(header[0], tuple(clauses))
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def read_dimacs(path) -> CnfFormula:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())


def dump_json(data, fh: TextIO | None = None) -> str:
    text = json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fh is not None:
        fh.write(text)
    return text


def emit_dot(g: Digraph, highlight: Iterable[int] = (), name: str = "G") -> str:
    marked = set(highlight)
    lines = [f"digraph {name} {{"]
    for v in range(g.n):
        attrs = [f'label="{g.label(v)}"']
        if v in marked:
            attrs.append("style=filled")
            attrs.append("fillcolor=lightblue")
        lines.append(f"  {v} [{', '.join(attrs)}];")
    for u, v in g.sorted_arcs():
        style = " [penwidth=2]" if u in marked and v in marked else ""
        lines.append(f"  {u} -> {v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"
