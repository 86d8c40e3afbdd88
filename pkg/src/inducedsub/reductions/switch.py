"""Switch gadgets: x -> z, x -> y1, z -> y1, z -> y2, y2 -> y1."""

from __future__ import annotations

from dataclasses import dataclass

from ..digraph import Digraph


@dataclass(frozen=True)
class SwitchSpec:
    x: int
    z: int
    y1: int
    y2: int

    @property
    def vertices(self) -> tuple[int, int, int, int]:
        return (self.x, self.z, self.y1, self.y2)

    def arcs(self) -> set[tuple[int, int]]:
        x, z, y1, y2 = self.vertices
        return {(x, z), (x, y1), (z, y1), (z, y2), (y2, y1)}

    def to_json(self) -> dict:
        return {"x": self.x, "z": self.z, "y1": self.y1, "y2": self.y2}


def is_good_switch(g: Digraph, s: SwitchSpec) -> bool:
    """Induced switch whose entering arcs all hit x and leaving arcs all start in {y1, y2}."""
    quad = set(s.vertices)
    if len(quad) != 4 or any(not 0 <= v < g.n for v in quad):
        return False
    inside = {(u, v) for u in quad for v in g.successors(u) if v in quad}
    if inside != s.arcs():
        return False
    for v in quad:
        if v != s.x and any(u not in quad for u in g.predecessors(v)):
            return False
        if v not in (s.y1, s.y2) and any(w not in quad for w in g.successors(v)):
            return False
    return True


def is_good_converse_switch(g: Digraph, s: SwitchSpec) -> bool:
    return is_good_switch(g.converse(), s)
