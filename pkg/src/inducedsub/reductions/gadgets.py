"""3-SAT gadget graphs whose induced (a, b)-paths encode satisfying assignments.

Literal ``+i`` is attached to the ``x`` side of variable i, ``-i`` to the
``xbar`` side.  An induced path through a clause gadget picks a literal and
the links then force the variable path onto the opposite side, so the
literals the clause path picks are the true ones.
"""

from __future__ import annotations

from ..sat import CnfFormula
from .base import GraphBuilder, ReductionOutput, require_nonempty
from .switch import SwitchSpec


def _side(lit: int) -> str:
    return "x" if lit > 0 else "xbar"


def _chain(bld: GraphBuilder, f: CnfFormula, var_ends, clause_ends, tail: str = "b") -> None:
    """Arcs a a_1, b_i a_{i+1}, b_n c_1, d_j c_{j+1} and d_m ``tail``."""
    n, m = f.num_vars, f.num_clauses
    bld.arc("a", var_ends(1)[0])
    for i in range(1, n):
        bld.arc(var_ends(i)[1], var_ends(i + 1)[0])
    bld.arc(var_ends(n)[1], clause_ends(1)[0])
    for j in range(1, m):
        bld.arc(clause_ends(j)[1], clause_ends(j + 1)[0])
    bld.arc(clause_ends(m)[1], tail)


def _ab(f):
    return lambda i: (f"a_{i}", f"b_{i}")


def _cd(f):
    return lambda j: (f"c_{j}", f"d_{j}")


def build_G1(f: CnfFormula) -> ReductionOutput:
    """Routes a_i x_i v_i b_i, a_i xbar_i vbar_i b_i; clause routes c_j l^t_j d_j; 3-cycle links."""
    require_nonempty(f)
    bld = GraphBuilder()
    bld.vertex("a")
    for i in range(1, f.num_vars + 1):
        bld.vertices([f"a_{i}", f"x_{i}", f"v_{i}", f"xbar_{i}", f"vbar_{i}", f"b_{i}"])
        bld.path(f"a_{i}", f"x_{i}", f"v_{i}", f"b_{i}")
        bld.path(f"a_{i}", f"xbar_{i}", f"vbar_{i}", f"b_{i}")
    for j, clause in enumerate(f.clauses, 1):
        bld.vertices([f"c_{j}", f"l^1_{j}", f"l^2_{j}", f"l^3_{j}", f"d_{j}"])
        for t, lit in enumerate(clause, 1):
            bld.path(f"c_{j}", f"l^{t}_{j}", f"d_{j}")
    bld.vertex("b")
    _chain(bld, f, _ab(f), _cd(f))
    for j, clause in enumerate(f.clauses, 1):
        for t, lit in enumerate(clause, 1):
            i = abs(lit)
            y, w = (f"x_{i}", f"v_{i}") if lit > 0 else (f"xbar_{i}", f"vbar_{i}")
            bld.arc(f"l^{t}_{j}", y)
            bld.arc(w, f"l^{t}_{j}")
    g = bld.build()
    return ReductionOutput(g, {"a": bld.ids["a"], "b": bld.ids["b"]}, "G1", f)


def build_G2(f: CnfFormula) -> ReductionOutput:
    """Like G1 but every link is a 2-cycle, so no induced cycle has length 3 or more.

    Variable gadget: a_i -> x_i -> b_i, a_i -> xbar_i -> b_i and the 2-cycle
    x_i xbar_i.  Clause gadget: c_j -> l^t_j -> d_j with the three literal
    vertices pairwise joined by 2-cycles.
    """
    require_nonempty(f)
    bld = GraphBuilder()
    bld.vertex("a")
    for i in range(1, f.num_vars + 1):
        bld.vertices([f"a_{i}", f"x_{i}", f"xbar_{i}", f"b_{i}"])
        bld.path(f"a_{i}", f"x_{i}", f"b_{i}")
        bld.path(f"a_{i}", f"xbar_{i}", f"b_{i}")
        bld.two_cycle(f"x_{i}", f"xbar_{i}")
    for j in range(1, f.num_clauses + 1):
        bld.vertices([f"c_{j}", f"l^1_{j}", f"l^2_{j}", f"l^3_{j}", f"d_{j}"])
        for t in range(1, 4):
            bld.path(f"c_{j}", f"l^{t}_{j}", f"d_{j}")
        for s, t in ((1, 2), (1, 3), (2, 3)):
            bld.two_cycle(f"l^{s}_{j}", f"l^{t}_{j}")
    bld.vertex("b")
    _chain(bld, f, _ab(f), _cd(f))
    for j, clause in enumerate(f.clauses, 1):
        for t, lit in enumerate(clause, 1):
            bld.two_cycle(f"l^{t}_{j}", f"{_side(lit)}_{abs(lit)}")
    g = bld.build()
    return ReductionOutput(g, {"a": bld.ids["a"], "b": bld.ids["b"]}, "G2", f)


def build_G3(f: CnfFormula) -> ReductionOutput:
    """G1 routes with clause routes c_j l^t_j m^t_j d_j.

    A literal link joins the clause pair (l, m) to the variable pair (y, w)
    by the 2-cycle w m plus the arcs m -> y and w -> l.  Every directed cycle
    other than a 2-cycle then has a chord, and no 2-cycle can be entered by
    an induced path.
    """
    require_nonempty(f)
    bld = GraphBuilder()
    bld.vertex("a")
    for i in range(1, f.num_vars + 1):
        bld.vertices([f"a_{i}", f"x_{i}", f"v_{i}", f"xbar_{i}", f"vbar_{i}", f"b_{i}"])
        bld.path(f"a_{i}", f"x_{i}", f"v_{i}", f"b_{i}")
        bld.path(f"a_{i}", f"xbar_{i}", f"vbar_{i}", f"b_{i}")
    for j in range(1, f.num_clauses + 1):
        bld.vertex(f"c_{j}")
        for t in range(1, 4):
            bld.vertices([f"l^{t}_{j}", f"m^{t}_{j}"])
            bld.path(f"c_{j}", f"l^{t}_{j}", f"m^{t}_{j}", f"d_{j}")
    bld.vertex("b")
    _chain(bld, f, _ab(f), _cd(f))
    for j, clause in enumerate(f.clauses, 1):
        for t, lit in enumerate(clause, 1):
            i = abs(lit)
            y, w = (f"x_{i}", f"v_{i}") if lit > 0 else (f"xbar_{i}", f"vbar_{i}")
            bld.two_cycle(w, f"m^{t}_{j}")
            bld.arc(f"m^{t}_{j}", y)
            bld.arc(w, f"l^{t}_{j}")
    g = bld.build()
    return ReductionOutput(g, {"a": bld.ids["a"], "b": bld.ids["b"]}, "G3", f)


def _g4_copies(f: CnfFormula, i: int, lit_sign: int, j: int) -> list[str]:
    """Suffixes of the (x, v) pairs on one route of variable i reserved for clause j."""
    clause = f.clauses[j - 1]
    slots = [t for t, lit in enumerate(clause, 1) if lit == lit_sign * i]
    if len(slots) <= 1:
        return [f"{j}"]
    return [f"{j}.{t}" for t in slots]


def build_G4(f: CnfFormula) -> ReductionOutput:
    """Degree-2 version of G1.

    Each route of variable i is a_i y^1 w^1 ... y^m w^m b_i (one pair per
    clause, or one per occurrence when a literal repeats inside a clause) and
    the link for clause j uses the superscript-j pair as a 3-cycle
    l -> y^j -> w^j -> l.  The clause gadget is c -> e -> {l^1, l^2} -> f -> d
    together with c -> l^3 -> d.
    """
    require_nonempty(f)
    bld = GraphBuilder()
    bld.vertex("a")
    link: dict[tuple[int, int], tuple[str, str]] = {}
    for i in range(1, f.num_vars + 1):
        bld.vertex(f"a_{i}")
        for sign, y, w in ((1, "x", "v"), (-1, "xbar", "vbar")):
            route = [f"a_{i}"]
            for j in range(1, f.num_clauses + 1):
                sufs = _g4_copies(f, i, sign, j)
                slots = [t for t, lit in enumerate(f.clauses[j - 1], 1) if lit == sign * i]
                for k, suf in enumerate(sufs):
                    ys, ws = f"{y}^{suf}_{i}", f"{w}^{suf}_{i}"
                    route += [ys, ws]
                    if k < len(slots):
                        link[(j, slots[k])] = (ys, ws)
            route.append(f"b_{i}")
            bld.vertices(route)
            bld.path(*route)
    for j in range(1, f.num_clauses + 1):
        c, e, fj, d = f"c_{j}", f"e_{j}", f"f_{j}", f"d_{j}"
        l1, l2, l3 = (f"l^{t}_{j}" for t in range(1, 4))
        bld.vertices([c, e, l1, l2, l3, fj, d])
        bld.path(c, e, l1, fj, d)
        bld.path(e, l2, fj)
        bld.path(c, l3, d)
    bld.vertex("b")
    _chain(bld, f, _ab(f), _cd(f))
    for (j, t), (ys, ws) in sorted(link.items()):
        bld.arc(f"l^{t}_{j}", ys)
        bld.arc(ws, f"l^{t}_{j}")
    g = bld.build()
    return ReductionOutput(g, {"a": bld.ids["a"], "b": bld.ids["b"]}, "G4", f)


_G5_PATHS = ("p", "q", "r")
# (s, t): arc y^s -> l^t for every literal occurrence
G5_LINKS = ((1, 3), (2, 3), (3, 1), (3, 2), (3, 3))


def build_G5(f: CnfFormula) -> ReductionOutput:
    """Two chains: a -> variable gadgets -> b and c -> clause gadgets -> d.

    Variable gadget paths X_i = a_i a'_i x^0..x^4 b_i and
    Xbar_i = a_i xbar^0..xbar^4 b'_i b_i, with switches at both ends.  Clause
    gadget paths P_j = c_j p_j p^0..p^3 d_j, Q_j = c_j q_j q'_j q^0..q^3 d_j
    and R_j = c_j q_j r^0..r^3 d_j, with two switches at the start.  A side
    y_i of variable i occurring as literal path l of clause j adds the arcs
    y^1 l^3, y^2 l^3, y^3 l^1, y^3 l^2 and y^3 l^3; all links go from
    variable gadgets to clause gadgets.
    """
    require_nonempty(f)
    bld = GraphBuilder()
    switches = []
    converse = []
    bld.vertices(["a", "b", "c", "d"])
    for i in range(1, f.num_vars + 1):
        ai, bi, a1, b1 = f"a_{i}", f"b_{i}", f"a'_{i}", f"b'_{i}"
        xs = [f"x^{s}_{i}" for s in range(5)]
        xbs = [f"xbar^{s}_{i}" for s in range(5)]
        bld.vertices([ai, a1, *xs, *xbs, b1, bi])
        bld.path(ai, a1, *xs, bi)
        bld.path(ai, *xbs, b1, bi)
        bld.arc(a1, xbs[0])
        bld.arc(xs[0], xbs[0])
        bld.arc(xs[4], b1)
        bld.arc(xs[4], xbs[4])
        ids = bld.ids
        switches.append(SwitchSpec(ids[ai], ids[a1], ids[xbs[0]], ids[xs[0]]))
        converse.append(SwitchSpec(ids[bi], ids[b1], ids[xs[4]], ids[xbs[4]]))
    for j in range(1, f.num_clauses + 1):
        c, d, p, q, q1 = f"c_{j}", f"d_{j}", f"p_{j}", f"q_{j}", f"q'_{j}"
        ps = [f"p^{s}_{j}" for s in range(4)]
        qs = [f"q^{s}_{j}" for s in range(4)]
        rs = [f"r^{s}_{j}" for s in range(4)]
        bld.vertices([c, p, *ps, q, q1, *qs, *rs, d])
        bld.path(c, p, *ps, d)
        bld.path(c, q, q1, *qs, d)
        bld.path(q, *rs, d)
        bld.arc(c, q)
        bld.arc(p, q)
        bld.arc(ps[0], q)
        bld.arc(q1, rs[0])
        bld.arc(qs[0], rs[0])
        ids = bld.ids
        switches.append(SwitchSpec(ids[c], ids[p], ids[q], ids[ps[0]]))
        switches.append(SwitchSpec(ids[q], ids[q1], ids[rs[0]], ids[qs[0]]))
    n, m = f.num_vars, f.num_clauses
    bld.arc("a", "a_1")
    for i in range(1, n):
        bld.arc(f"b_{i}", f"a_{i + 1}")
    bld.arc(f"b_{n}", "b")
    bld.arc("c", "c_1")
    for j in range(1, m):
        bld.arc(f"d_{j}", f"c_{j + 1}")
    bld.arc(f"d_{m}", "d")
    for j, clause in enumerate(f.clauses, 1):
        for t, lit in enumerate(clause, 1):
            side, path = _side(lit), _G5_PATHS[t - 1]
            for sy, sl in G5_LINKS:
                bld.arc(f"{side}^{sy}_{abs(lit)}", f"{path}^{sl}_{j}")
    g = bld.build()
    specials = {k: bld.ids[k] for k in "abcd"}
    return ReductionOutput(g, specials, "G5", f, switches=tuple(switches), converse_switches=tuple(converse))
