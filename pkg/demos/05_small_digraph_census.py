"""
A census of small digraphs
==========================

There are 9608 digraphs on five vertices up to isomorphism.  Enumerating
them (canonical codes computed with numpy) lets us ask how common each
pattern is, and cross-check every detector against the oracle on the way.
"""

import numpy as np

from inducedsub import detect, oracle_find_subdivision, parse_pattern
from inducedsub.digraph import is_oriented
from inducedsub.generate import iso_classes

patterns = ["pk:3", "pk:4", "c2", "c:3", "tt:3", "a-:3"]

# %%
# rows are vertex counts, columns patterns; entries are the share of
# isomorphism classes that contain an induced subdivision
rows = []
for n in range(2, 6):
    hosts = iso_classes(n)
    hits = np.zeros((len(hosts), len(patterns)), dtype=bool)
    for i, g in enumerate(hosts):
        for j, name in enumerate(patterns):
            res = detect(g, parse_pattern(name))
            hits[i, j] = res.found
            if n <= 4:
                assert res.found == (oracle_find_subdivision(g, res.pattern) is not None)
    rows.append(hits.mean(axis=0))
    print(f"n={n}: {len(hosts):5d} classes")

table = np.vstack(rows)
print("\n      " + " ".join(f"{p:>6s}" for p in patterns))
for n, row in zip(range(2, 6), table):
    print(f"n={n}   " + " ".join(f"{x:6.2f}" for x in row))

# %%
# Restricting to oriented graphs removes every 2-cycle, so c2 can only be
# realised by longer cycles.
oriented = [g for g in iso_classes(5) if is_oriented(g)]
share = np.mean([detect(g, parse_pattern("c2")).found for g in oriented])
print(f"\noriented 5-vertex classes: {len(oriented)}, share with a directed cycle: {share:.2f}")
