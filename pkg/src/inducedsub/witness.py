"""Certificates of induced subdivisions and their verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .digraph import Arc, Digraph, induced_arcs


@dataclass(frozen=True)
class Witness:
    """An induced D-subdivision inside G.

    ``node_map`` sends each pattern vertex to a host vertex and ``branches``
    sends each pattern arc to the host path realizing it.
    """

    node_map: Mapping[int, int]
    branches: Mapping[Arc, tuple[int, ...]] = field(default_factory=dict)

    @property
    def vertices(self) -> frozenset[int]:
        out = set(self.node_map.values())
        for path in self.branches.values():
            out.update(path)
        return frozenset(out)

    def shifted(self, offset: int) -> "Witness":
        """Same witness with pattern ids shifted by ``offset`` (for disjoint unions)."""
        return Witness(
            {a + offset: v for a, v in self.node_map.items()},
            {(a + offset, b + offset): p for (a, b), p in self.branches.items()},
        )

    def relabel(self, ids) -> "Witness":
        """Map host ids through ``ids`` (a sequence or mapping)."""
        return Witness(
            {a: ids[v] for a, v in self.node_map.items()},
            {arc: tuple(ids[v] for v in p) for arc, p in self.branches.items()},
        )

    def to_json(self) -> dict:
        return {
            "vertices": sorted(self.vertices),
            "node_map": {str(a): v for a, v in sorted(self.node_map.items())},
            "branches": [
                {"arc": [a, b], "path": list(p)} for (a, b), p in sorted(self.branches.items())
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Witness":
        node_map = {int(a): int(v) for a, v in data["node_map"].items()}
        branches = {(int(b["arc"][0]), int(b["arc"][1])): tuple(int(v) for v in b["path"]) for b in data["branches"]}
        return cls(node_map, branches)


def merge_witnesses(parts: Iterable[tuple[Witness, int]]) -> Witness:
    """Combine witnesses of disjoint pattern parts given with their pattern offsets."""
    node_map: dict[int, int] = {}
    branches: dict[Arc, tuple[int, ...]] = {}
    for w, offset in parts:
        s = w.shifted(offset)
        node_map.update(s.node_map)
        branches.update(s.branches)
    return Witness(node_map, branches)


def witness_problems(g: Digraph, d: Digraph, w: Witness) -> list[str]:
    """Reasons why ``w`` is not an induced D-subdivision of G (empty if it is)."""
    problems = []
    if set(w.node_map) != set(range(d.n)):
        return ["node map does not cover the pattern vertices"]
    if set(w.branches) != set(d.arcs):
        return ["branch map does not match the pattern arcs"]
    images = list(w.node_map.values())
    if any(not 0 <= v < g.n for v in images):
        return ["node map leaves the host graph"]
    if len(set(images)) != len(images):
        problems.append("node map is not injective")
    used_arcs: list[Arc] = []
    internal_owner: dict[int, Arc] = {}
    image_set = set(images)
    for (a, b), path in sorted(w.branches.items()):
        if len(path) < 2:
            problems.append(f"branch {(a, b)} is too short")
            continue
        if any(not 0 <= v < g.n for v in path):
            problems.append(f"branch {(a, b)} leaves the host graph")
            continue
        if path[0] != w.node_map[a] or path[-1] != w.node_map[b]:
            problems.append(f"branch {(a, b)} has wrong endpoints")
        if len(set(path)) != len(path):
            problems.append(f"branch {(a, b)} repeats a vertex")
        for u, v in zip(path, path[1:]):
            if not g.has_arc(u, v):
                problems.append(f"branch {(a, b)} uses missing arc {(u, v)}")
            used_arcs.append((u, v))
        for v in path[1:-1]:
            if v in image_set:
                problems.append(f"branch {(a, b)} passes through branch vertex {v}")
            elif v in internal_owner:
                problems.append(f"branches {internal_owner[v]} and {(a, b)} share vertex {v}")
            else:
                internal_owner[v] = (a, b)
    if problems:
        return problems
    if len(set(used_arcs)) != len(used_arcs):
        problems.append("an arc is used by two branches")
    extra = induced_arcs(g, w.vertices) - set(used_arcs)
    if extra:
        problems.append(f"induced subgraph has extra arcs {sorted(extra)}")
    return problems


def verify_witness(g: Digraph, d: Digraph, w: Witness) -> bool:
    return not witness_problems(g, d, w)


def path_witness(path) -> Witness:
    """Witness of a directed path pattern ``0 -> ... -> k-1`` along ``path``."""
    return Witness({i: v for i, v in enumerate(path)}, {(i, i + 1): (path[i], path[i + 1]) for i in range(len(path) - 1)})


def cycle_witness(cycle, k: int) -> Witness:
    """Witness of the directed k-cycle pattern along a chordless cycle of length >= k."""
    if len(cycle) < k:
        raise ValueError("cycle shorter than the pattern")
    node_map = {i: cycle[i] for i in range(k)}
    branches = {(i, i + 1): (cycle[i], cycle[i + 1]) for i in range(k - 1)}
    branches[(k - 1, 0)] = tuple(cycle[k - 1:]) + (cycle[0],)
    return Witness(node_map, branches)
