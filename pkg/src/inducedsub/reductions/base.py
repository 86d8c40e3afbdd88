"""Shared plumbing for the gadget generators."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from ..digraph import Digraph


@dataclass(frozen=True)
class ReductionOutput:
    """A generated graph together with its named vertices and provenance.

    ``pattern`` is the digraph whose induced subdivisions the construction
    encodes, or ``None`` for the intermediate constructions whose target is an
    induced (a, b)-path.
    """

    graph: Digraph
    specials: Mapping[str, int]
    family: str
    source: Any = None
    pattern: Digraph | None = None
    switches: tuple = ()
    converse_switches: tuple = ()
    extra: Mapping[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        ids = list(self.specials.values())
        if len(set(ids)) != len(ids):
            raise ValueError("special vertices must be distinct")
        if any(not 0 <= v < self.graph.n for v in ids):
            raise ValueError("special vertex out of range")

    def __getitem__(self, name: str) -> int:
        return self.specials[name]

    def sidecar(self) -> dict:
        """JSON-ready description: specials, family tag and provenance."""
        src = self.source
        if hasattr(src, "to_json"):
            src = src.to_json()
        out = {
            "family": self.family,
            "n": self.graph.n,
            "m": self.graph.m,
            "specials": dict(sorted(self.specials.items())),
            "source": src,
        }
        if self.switches:
            out["switches"] = [s.to_json() for s in self.switches]
        if self.converse_switches:
            out["converse_switches"] = [s.to_json() for s in self.converse_switches]
        if self.extra:
            out.update(self.extra)
        return out


class GraphBuilder:
    """Accumulates named vertices and arcs; ids follow first mention."""

    def __init__(self):
        self.names: list[str] = []
        self.ids: dict[str, int] = {}
        self.arcs: list[tuple[int, int]] = []

    def vertex(self, name: str) -> int:
        if name not in self.ids:
            self.ids[name] = len(self.names)
            self.names.append(name)
        return self.ids[name]

    def vertices(self, names: Iterable[str]) -> None:
        for name in names:
            self.vertex(name)

    def arc(self, u: str, v: str) -> None:
        self.arcs.append((self.vertex(u), self.vertex(v)))

    def path(self, *names: str) -> None:
        for u, v in zip(names, names[1:]):
            self.arc(u, v)

    def two_cycle(self, u: str, v: str) -> None:
        self.arc(u, v)
        self.arc(v, u)

    def build(self) -> Digraph:
        return Digraph(len(self.names), self.arcs, dict(enumerate(self.names)))


def require_nonempty(f) -> None:
    if f.num_vars < 1 or f.num_clauses < 1:
        raise ValueError("formula must have at least one variable and one clause")


def graft(
    host: Digraph,
    gadget: ReductionOutput,
    *,
    remove: Iterable[tuple[int, int]] = (),
    add: Iterable[tuple[int | str, int | str]] = (),
    identify: Mapping[str, int] | None = None,
    host_prefix: str = "D:",
) -> tuple[Digraph, dict[str, int]]:
    """Disjoint union of ``host`` and a gadget graph, then rewire.

    Host vertices keep their ids (labels get ``host_prefix``); gadget vertices
    follow.  In ``add`` an int names a host vertex and a str a gadget special.
    ``identify`` merges gadget specials into host vertices.
    """
    identify = dict(identify or {})
    g = gadget.graph
    merged = {gadget.specials[name]: hv for name, hv in identify.items()}
    ids: dict[int, int] = {}
    nxt = host.n
    for v in range(g.n):
        if v in merged:
            ids[v] = merged[v]
        else:
            ids[v] = nxt
            nxt += 1
    labels = {v: host_prefix + host.label(v) for v in range(host.n)}
    for v in range(g.n):
        if v not in merged:
            labels[ids[v]] = g.label(v)
    removed = set(remove)
    missing = removed - host.arcs
    if missing:
        raise ValueError(f"arcs {sorted(missing)} are not in the host")
    arcs = set(host.arcs) - removed
    arcs.update((ids[u], ids[v]) for u, v in g.arcs)

    def resolve(x):
        return ids[gadget.specials[x]] if isinstance(x, str) else x

    arcs.update((resolve(u), resolve(v)) for u, v in add)
    specials = {name: ids[v] for name, v in gadget.specials.items()}
    return Digraph(nxt, arcs, labels), specials
