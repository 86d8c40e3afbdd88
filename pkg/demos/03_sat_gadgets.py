"""
From 3-SAT to induced cycles
============================

The hardness side works by gadgets.  Each variable gets two parallel routes
(true and false), each clause gets three, and links between literal vertices
and clause routes make any induced route through all gadgets pick a
consistent assignment.  Closing the route with an arc b -> a turns "induced
(a,b)-path" into "induced cycle of length at least four".
"""

from inducedsub.families import directed_cycle
from inducedsub.oracle import search_subdivision, solve_induced_ab_path
from inducedsub.reductions import build_G1, build_G1_star
from inducedsub.sat import CnfFormula, solve_sat

sat = CnfFormula(3, ((1, 2, -3), (-1, -2, 3), (1, -2, 3)))
unsat = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))

# %%
out = build_G1(sat)
print(f"G1 has {out.graph.n} vertices and {out.graph.m} arcs")
path = solve_induced_ab_path(out.graph, out["a"], out["b"])
print("induced (a,b)-path:", " ".join(out.graph.label(v) for v in path))

# %%
# The path walks x_i exactly when x_i is false (it must avoid the literal
# vertices that the chosen clause routes point at), so it spells out an
# assignment.
labels = {out.graph.label(v) for v in path}
assignment = {i: f"xbar_{i}" in labels for i in range(1, sat.num_vars + 1)}
print("decoded assignment:", assignment, "satisfies:", sat.satisfied_by(assignment))

# %%
for name, f in [("satisfiable", sat), ("unsatisfiable", unsat)]:
    g1s = build_G1_star(f)
    w = search_subdivision(g1s.graph, directed_cycle(4))
    print(f"{name}: DPLL={solve_sat(f) is not None}, induced C4-subdivision={w is not None}")
