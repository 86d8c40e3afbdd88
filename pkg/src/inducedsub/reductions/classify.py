"""Complexity classification of detection patterns."""

from __future__ import annotations

from dataclasses import dataclass

from ..digraph import Digraph, central_branches, is_oriented, is_spider_forest, weak_components


@dataclass(frozen=True)
class Classification:
    kind: str  # PolySpiders | PolySpidersPlusC2 | NPC | Unknown
    reason: str = ""

    def __str__(self) -> str:
        return self.kind if not self.reason else f"{self.kind}: {self.reason}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "reason": self.reason}


def _is_directed_cycle(g: Digraph) -> bool:
    return g.n >= 2 and all(g.in_degree(v) == 1 and g.out_degree(v) == 1 for v in range(g.n)) and len(weak_components(g)) == 1


def classify_pattern(d: Digraph) -> Classification:
    comps = [d.induced(c)[0] for c in weak_components(d)]
    if is_oriented(d):
        if is_spider_forest(d):
            return Classification("PolySpiders", "disjoint union of spiders")
        if central_branches(d):
            return Classification("NPC", "central branch")
        if any(_is_directed_cycle(c) and c.n >= 3 for c in comps):
            return Classification("NPC", "cycle component")
        return Classification("Unknown", "no rule applies")
    twos = [c for c in comps if c.n == 2 and c.m == 2]
    rest = [c for c in comps if not (c.n == 2 and c.m == 2)]
    if len(twos) <= 1 and all(is_oriented(c) and is_spider_forest(c) for c in rest):
        return Classification("PolySpidersPlusC2", "spiders plus at most one 2-cycle")
    return Classification("Unknown", "conjectured NP-complete")

