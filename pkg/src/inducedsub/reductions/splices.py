"""Pattern-specific wrappers around the gadget graphs."""

from __future__ import annotations

from ..digraph import Digraph, central_branches, disjoint_union, is_oriented, iter_chordless_cycles, weak_components
from ..families import cone, directed_cycle, lollipop, st4, transitive_tournament
from ..oracle import DidppInstance
from ..sat import CnfFormula
from .base import ReductionOutput, graft
from .gadgets import build_G1, build_G2, build_G3, build_G4, build_G5
from .reachability import check_reachability_condition


def build_G1_star(f: CnfFormula) -> ReductionOutput:
    """G1 plus the arc b -> a; its induced cycles of length at least 4 all use b a."""
    base = build_G1(f)
    g = base.graph.with_arcs(add=[(base["b"], base["a"])])
    return ReductionOutput(g, dict(base.specials), "G1star", f, pattern=directed_cycle(4))


def find_cycle_splice_arc(d: Digraph) -> tuple[int, int]:
    """First arc (u, v) on an induced cycle of length >= 4 with deg(u) = 2, in lexicographic order."""
    best = None
    for cycle in iter_chordless_cycles(d, min_length=4):
        k = len(cycle)
        for i, u in enumerate(cycle):
            if d.in_degree(u) + d.out_degree(u) == 2:
                arc = (u, cycle[(i + 1) % k])
                if best is None or arc < best:
                    best = arc
    if best is None:
        raise ValueError("pattern has no induced cycle of length >= 4 through a degree-2 vertex")
    return best


def build_G1_prime(d: Digraph, f: CnfFormula) -> ReductionOutput:
    """Replace an arc u v of d by G1 together with u -> a and b -> v."""
    if not is_oriented(d):
        raise ValueError("pattern must be oriented")
    u, v = find_cycle_splice_arc(d)
    g, specials = graft(d, build_G1(f), remove=[(u, v)], add=[(u, "a"), ("b", v)])
    specials.update(u=u, v=v)
    return ReductionOutput(g, specials, "G1prime", f, pattern=d)


def reduce_didpp_to_two_cycles(inst: DidppInstance) -> ReductionOutput:
    """Close each terminal pair into a cycle through a new vertex u_i."""
    g = inst.g
    u1, u2 = g.n, g.n + 1
    labels = dict(g.labels)
    labels.update({u1: "u1", u2: "u2"})
    arcs = set(g.arcs) | {(inst.t1, u1), (u1, inst.s1), (inst.t2, u2), (u2, inst.s2)}
    h = Digraph(g.n + 2, arcs, labels)
    specials = {"s1": inst.s1, "t1": inst.t1, "s2": inst.s2, "t2": inst.t2, "u1": u1, "u2": u2}
    source = {"n": g.n, "arcs": [list(a) for a in g.sorted_arcs()], "terminals": [inst.s1, inst.t1, inst.s2, inst.t2]}
    return ReductionOutput(h, specials, "DIDPP2C", source, pattern=disjoint_union(directed_cycle(3), directed_cycle(3)))


def build_G2_k(f: CnfFormula, k: int) -> ReductionOutput:
    """C_k with the arc v1 v2 replaced by G2 (v1 = a, v2 = b)."""
    if k < 3:
        raise ValueError("k must be at least 3")
    ck = directed_cycle(k)
    g, specials = graft(ck, build_G2(f), remove=[(0, 1)], identify={"a": 0, "b": 1})
    specials.update({f"v{i + 1}": i for i in range(2, k)})  # a is v1, b is v2
    return ReductionOutput(g, specials, "G2k", f, pattern=ck, extra={"k": k})


def build_G2_D(d: Digraph, f: CnfFormula) -> ReductionOutput:
    """Replace the first arc of the first central branch of d by G2."""
    if not is_oriented(d):
        raise ValueError("pattern must be oriented")
    branches = central_branches(d)
    if not branches:
        raise ValueError("pattern has no central branch")
    branch = branches[0]
    a, b = branch[0], branch[1]
    g, specials = graft(d, build_G2(f), remove=[(a, b)], identify={"a": a, "b": b})
    return ReductionOutput(g, specials, "G2D", f, pattern=d, extra={"branch": list(branch)})


def _three_vertex_splice(f: CnfFormula, pattern: Digraph, family: str) -> ReductionOutput:
    # pattern vertices x=0, y=1, z=2: drop y z, add y -> a and b -> z
    g, specials = graft(pattern, build_G3(f), remove=[(1, 2)], add=[(1, "a"), ("b", 2)])
    specials.update(x=0, y=1, z=2)
    return ReductionOutput(g, specials, family, f, pattern=pattern)


def build_G3_L(f: CnfFormula) -> ReductionOutput:
    return _three_vertex_splice(f, lollipop(), "G3L")


def build_G3_C(f: CnfFormula) -> ReductionOutput:
    """Cone analogue of the lollipop splice (same rewiring, extra arc x z kept)."""
    return _three_vertex_splice(f, cone(), "G3C")


def build_G4_k(f: CnfFormula, k: int) -> ReductionOutput:
    """TT_k minus v1 vk, plus G4 with v1 -> a and b -> vk."""
    if k < 4:
        raise ValueError("k must be at least 4")
    tt = transitive_tournament(k)
    g, specials = graft(tt, build_G4(f), remove=[(0, k - 1)], add=[(0, "a"), ("b", k - 1)])
    specials.update({f"v{i + 1}": i for i in range(k)})
    return ReductionOutput(g, specials, "G4k", f, pattern=tt, extra={"k": k})


def find_reachability_splice_arc(d: Digraph) -> tuple[int, int]:
    report = check_reachability_condition(d)
    if not report.holds:
        raise ValueError("pattern fails the reachability condition")
    big = set(report.X) | set(report.Y)
    for u, v in d.sorted_arcs():
        if u in big or v in big:
            return u, v
    raise ValueError("no arc has an end of out-degree or in-degree at least 3")


def build_G4_prime(d: Digraph, f: CnfFormula) -> ReductionOutput:
    if not is_oriented(d):
        raise ValueError("pattern must be oriented")
    u, v = find_reachability_splice_arc(d)
    g, specials = graft(d, build_G4(f), remove=[(u, v)], add=[(u, "a"), ("b", v)])
    specials.update(u=u, v=v)
    return ReductionOutput(g, specials, "G4prime", f, pattern=d)


def build_G5_star(f: CnfFormula) -> ReductionOutput:
    """G5 plus the 4-cycle a -> c -> b -> d -> a."""
    base = build_G5(f)
    a, b, c, d = (base[k] for k in "abcd")
    g = base.graph.with_arcs(add=[(a, c), (c, b), (b, d), (d, a)])
    return ReductionOutput(
        g, dict(base.specials), "G5star", f, pattern=st4(),
        switches=base.switches, converse_switches=base.converse_switches,
    )


def compose_component(d: Digraph, component_index: int, g1: Digraph) -> Digraph:
    """Replace the weak component of d with the given index by g1.

    Components are ordered by their smallest vertex.  g1 comes first in the
    result, the remaining components follow in order.
    """
    comps = weak_components(d)
    if not 0 <= component_index < len(comps):
        raise IndexError(f"component index {component_index} out of range (d has {len(comps)})")
    parts = [g1]
    for i, comp in enumerate(comps):
        if i != component_index:
            parts.append(d.induced(comp)[0])
    return disjoint_union(*parts)
