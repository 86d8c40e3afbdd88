"""The two-paths reachability condition on out-/in-degree-3 vertices."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..digraph import Digraph
from ..flow import two_paths_set_to_vertex, two_paths_vertex_to_set


@dataclass(frozen=True)
class ReachabilityReport:
    """X: out-degree >= 3, Y: in-degree >= 3, Z: the rest.

    ``certificates`` maps each z in Z to ("from-X", P, Q), ("to-Y", P, Q) or
    None when neither pair of paths exists.
    """

    holds: bool
    X: tuple[int, ...]
    Y: tuple[int, ...]
    Z: tuple[int, ...]
    certificates: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        certs = {}
        for z, c in sorted(self.certificates.items()):
            certs[str(z)] = None if c is None else {"kind": c[0], "paths": [list(c[1]), list(c[2])]}
        return {"holds": self.holds, "X": list(self.X), "Y": list(self.Y), "Z": list(self.Z), "certificates": certs}


def check_reachability_condition(d: Digraph) -> ReachabilityReport:
    X = tuple(v for v in range(d.n) if d.out_degree(v) >= 3)
    Y = tuple(v for v in range(d.n) if d.in_degree(v) >= 3)
    big = set(X) | set(Y)
    Z = tuple(v for v in range(d.n) if v not in big)
    certs = {}
    for z in Z:
        paths = two_paths_set_to_vertex(d, X, z) if X else None
        if paths is not None:
            certs[z] = ("from-X", *paths)
            continue
        paths = two_paths_vertex_to_set(d, z, Y) if Y else None
        certs[z] = None if paths is None else ("to-Y", *paths)
    return ReachabilityReport(all(c is not None for c in certs.values()), X, Y, Z, certs)
