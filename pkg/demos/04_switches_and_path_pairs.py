"""
Switches and disjoint induced path pairs
========================================

A switch is four vertices x, z, y1, y2 wired so that an induced path can
cross it only as x y1 or as x z y2.  The G5 construction threads variable
and clause paths through switches and asks for two disjoint, mutually
non-adjacent induced paths: one from a to b and one from c to d.  Such a
pair exists exactly when the formula is satisfiable.
"""

import itertools

from inducedsub.families import st4
from inducedsub.oracle import DidppInstance, search_subdivision, solve_didpp
from inducedsub.reductions import build_G5, build_G5_star, is_good_switch
from inducedsub.sat import CnfFormula, solve_sat

f = CnfFormula(2, ((1, 2, 2), (-1, -2, -2)))
out = build_G5(f)
g = out.graph
print(f"G5 has {g.n} vertices, {len(out.switches)} switches, {len(out.converse_switches)} converse switches")
for s in out.switches[:3]:
    names = [g.label(v) for v in s.vertices]
    print("  switch", names, "good:", is_good_switch(g, s))

# %%
pair = solve_didpp(DidppInstance(g, out["a"], out["b"], out["c"], out["d"]))
print("a-b path:", " ".join(g.label(v) for v in pair[0]))
print("c-d path:", " ".join(g.label(v) for v in pair[1]))

# %%
# Closing the two paths into a 4-cycle with arcs a->c, c->b, b->d, d->a gives
# G5*.  The path pair still tracks satisfiability, but the full ST4 question
# does not: for this unsatisfiable formula the routing oracle still finds an
# ST4-subdivision, through a chord from a along the first variable path.
unsat = CnfFormula(3, tuple(tuple(s * v for s, v in zip(signs, (1, 2, 3)))
                            for signs in itertools.product((1, -1), repeat=3)))
star = build_G5_star(unsat)
g5 = build_G5(unsat)
pair = solve_didpp(DidppInstance(g5.graph, g5["a"], g5["b"], g5["c"], g5["d"]))
w = search_subdivision(star.graph, st4())
print(f"\nunsatisfiable formula: DPLL={solve_sat(unsat) is not None}, path pair={pair is not None}, ST4 found={w is not None}")
print("ST4 branch vertices:", sorted(star.graph.label(v) for v in w.node_map.values()))
