"""
Induced BFS and the cherry dichotomy
====================================

Induced BFS grows an out-tree from a root, adding a vertex only when the
tree stays induced.  When it stops, either some rejected vertex exposes a
cherry (a stem followed by two internally disjoint paths that meet again),
or every rejected out-neighbour of a tree vertex points back to one of that
vertex's ancestors.  The second outcome certifies that no cherry is rooted
there.
"""

import random

from inducedsub.families import tiny_cherry, transitive_tournament
from inducedsub.generate import random_oriented
from inducedsub.ibfs import cherry_or_obstruction, obstruction_holds
from inducedsub.oracle import oracle_find_subdivision

rng = random.Random(3)
g = random_oriented(9, 0.3, rng)
print("host arcs:", g.sorted_arcs())

# %%
for s in range(g.n):
    tree, cherry = cherry_or_obstruction(g, s)
    blocked = obstruction_holds(g, tree)
    if cherry is not None:
        print(f"root {s}: cherry  stem={cherry.P} Q={cherry.Q} R={cherry.R}")
    else:
        print(f"root {s}: blocked tree={tree.order}")
    # exactly one of the two outcomes holds
    assert (cherry is None) == blocked

# %%
# The dichotomy does not depend on the visit order.  Shuffle it and compare
# with the oracle, which knows nothing about trees.
for s in range(g.n):
    rank = list(range(g.n))
    rng.shuffle(rank)
    _, cherry = cherry_or_obstruction(g, s, rank)
    exists = any(oracle_find_subdivision(g, d, fixed={0: s}) is not None
                 for d in (transitive_tournament(3), tiny_cherry(1)))
    print(f"root {s}: shuffled IBFS {'finds' if cherry else 'rules out'} a cherry, oracle says {exists}")
