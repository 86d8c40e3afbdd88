"""Induced BFS, cherries and TT3-type detectors for oriented graphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .basic import copy_witness, iter_induced_copies, iter_induced_oriented_paths
from .digraph import Digraph, disjoint_union, is_oriented, is_spider_forest
from .families import tiny_cherry
from .witness import Witness, merge_witnesses


@dataclass(frozen=True)
class IbfsTree:
    root: int
    parent: dict[int, int]
    order: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.order)

    def path_from_root(self, v: int) -> list[int]:
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        return out[::-1]

    def ancestors(self, v: int) -> set[int]:
        """Ancestors of ``v`` including ``v`` itself."""
        return set(self.path_from_root(v))


def _rank_key(rank):
    if rank is None:
        return None
    return lambda v: (rank[v], v)


def ibfs(g: Digraph, s: int, rank: Sequence[int] | None = None, within: Iterable[int] | None = None) -> IbfsTree:
    """Grow an induced out-tree from ``s``.

    Out-neighbours are examined in ascending id, or by ``rank`` when given.
    A vertex joins when its only neighbour already in the tree is the vertex
    being visited.
    """
    alive = None if within is None else set(within)
    key = _rank_key(rank)
    parent: dict[int, int] = {}
    order = [s]
    in_tree = {s}
    count = [0] * g.n  # tree neighbours of each vertex
    for w in g.neighbors(s):
        count[w] += 1
    queue = deque([s])
    while queue:
        u = queue.popleft()
        succ = g.successors(u) if key is None else sorted(g.successors(u), key=key)
        for v in succ:
            if v in in_tree or count[v] != 1 or (alive is not None and v not in alive):
                continue
            in_tree.add(v)
            parent[v] = u
            order.append(v)
            queue.append(v)
            for w in g.neighbors(v):
                count[w] += 1
    return IbfsTree(s, parent, tuple(order))


def obstruction_holds(g: Digraph, tree: IbfsTree, within: Iterable[int] | None = None) -> bool:
    """Every out-neighbour y of a tree vertex x outside the tree has an out-neighbour that is an ancestor of x."""
    alive = None if within is None else set(within)
    members = tree.vertices
    for x in tree.order:
        anc = None
        for y in g.successors(x):
            if y in members or (alive is not None and y not in alive):
                continue
            if anc is None:
                anc = tree.ancestors(x)
            if not anc.intersection(g.successors(y)):
                return False
    return True


@dataclass(frozen=True)
class CherryWitness:
    """Cherry on (s, u, v): a path P from s to u and two u->v paths Q, R."""

    s: int
    u: int
    v: int
    P: tuple[int, ...]
    Q: tuple[int, ...]
    R: tuple[int, ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.P) | frozenset(self.Q) | frozenset(self.R)

    def problems(self, g: Digraph) -> list[str]:
        out = []
        P, Q, R = self.P, self.Q, self.R
        if P[0] != self.s or P[-1] != self.u:
            out.append("P does not run from s to u")
        for name, path in (("Q", Q), ("R", R)):
            if path[0] != self.u or path[-1] != self.v:
                out.append(f"{name} does not run from u to v")
        if len(Q) < 2 or len(R) < 2 or max(len(Q), len(R)) < 3:
            out.append("Q and R are too short")
        if set(Q[1:-1]) & set(R[1:-1]) or set(P[:-1]) & (set(Q) | set(R)):
            out.append("paths overlap outside u and v")
        if out:
            return out
        pattern_arcs = set()
        for path in (P, Q, R):
            if len(set(path)) != len(path):
                out.append("a path repeats a vertex")
            for a, b in zip(path, path[1:]):
                if not g.has_arc(a, b):
                    out.append(f"missing arc {(a, b)}")
                pattern_arcs.add((a, b))
        members = self.vertices
        extra = {(a, b) for a in members for b in g.successors(a) if b in members} - pattern_arcs
        if extra:
            out.append(f"extra arcs {sorted(extra)}")
        return out

    def is_valid(self, g: Digraph) -> bool:
        return not self.problems(g)

    def tt3_witness(self) -> Witness:
        """TT3 witness made of Q and R (source u, sink v)."""
        long, short = (self.Q, self.R) if len(self.Q) >= len(self.R) else (self.R, self.Q)
        return Witness(
            {0: self.u, 1: long[1], 2: self.v},
            {(0, 1): tuple(long[:2]), (1, 2): tuple(long[1:]), (0, 2): tuple(short)},
        )

    def to_json(self) -> dict:
        return {"s": self.s, "u": self.u, "v": self.v, "P": list(self.P), "Q": list(self.Q), "R": list(self.R)}


def _cherry_from_tree(g: Digraph, tree: IbfsTree, rank, alive) -> CherryWitness | None:
    members = tree.vertices
    position = {v: i for i, v in enumerate(tree.order)}
    key = _rank_key(rank)
    for x in tree.order:
        anc = tree.ancestors(x)
        succ = g.successors(x) if key is None else sorted(g.successors(x), key=key)
        for y in succ:
            if y in members or (alive is not None and y not in alive):
                continue
            if anc.intersection(g.successors(y)):
                continue
            # y was rejected when x was visited, so it has another tree neighbour
            v = min((w for w in g.neighbors(y) if w in members and w != x), key=position.__getitem__)
            px = tree.path_from_root(x)
            pv = tree.path_from_root(v)
            common = set(pv)
            u = next(w for w in reversed(px) if w in common)
            P = tuple(px[: px.index(u) + 1])
            tx = tuple(px[px.index(u):])
            tv = tuple(pv[pv.index(u):])
            if g.has_arc(y, v):
                return CherryWitness(tree.root, u, v, P, tx + (y, v), tv)
            # v may sit in the tree unvisited when y is met, so v -> y also occurs
            return CherryWitness(tree.root, u, y, P, tx + (y,), tv + (y,))
    return None


def cherry_rooted(
    g: Digraph, s: int, rank: Sequence[int] | None = None, within: Iterable[int] | None = None
) -> CherryWitness | None:
    """A cherry rooted at ``s``, or ``None`` when the IBFS tree certifies there is none."""
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")
    alive = None if within is None else set(within)
    tree = ibfs(g, s, rank, alive)
    return _cherry_from_tree(g, tree, rank, alive)


def cherry_or_obstruction(g: Digraph, s: int, rank=None, within=None) -> tuple[IbfsTree, CherryWitness | None]:
    alive = None if within is None else set(within)
    tree = ibfs(g, s, rank, alive)
    return tree, _cherry_from_tree(g, tree, rank, alive)


def find_cherry(g: Digraph, within: Iterable[int] | None = None) -> CherryWitness | None:
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")
    roots = range(g.n) if within is None else sorted(set(within))
    for s in roots:
        c = cherry_rooted(g, s, within=within)
        if c is not None:
            return c
    return None


def detect_TT3_subdivision(g: Digraph, within: Iterable[int] | None = None) -> Witness | None:
    c = find_cherry(g, within)
    return None if c is None else c.tt3_witness()


def _tiny_cherry_witness(prefix: Sequence[int], c: CherryWitness) -> Witness:
    p = len(prefix) - 1
    long, short = (c.Q, c.R) if len(c.Q) >= len(c.R) else (c.R, c.Q)
    node_map = {p: c.u, p + 1: long[1], p + 2: c.v}
    branches = {(p, p + 1): tuple(long[:2]), (p + 1, p + 2): tuple(long[1:]), (p, p + 2): tuple(short)}
    if p >= 1:
        stem = list(prefix) + list(c.P[1:])
        for i in range(p):
            node_map[i] = stem[i]
        for i in range(p - 1):
            branches[(i, i + 1)] = (stem[i], stem[i + 1])
        branches[(p - 1, p)] = tuple(stem[p - 1:])
    return Witness(node_map, branches)


def detect_tiny_cherry(g: Digraph, prefix_len: int, within: Iterable[int] | None = None) -> Witness | None:
    """Induced subdivision of ``tiny_cherry(prefix_len)``."""
    if prefix_len < 0:
        raise ValueError("prefix length must be nonnegative")
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")
    alive = set(range(g.n)) if within is None else set(within)
    for prefix in iter_induced_oriented_paths(g, [1] * prefix_len, alive):
        x = prefix[-1]
        rest = set(alive)
        for q in prefix[:-1]:
            rest.discard(q)
            rest.difference_update(w for w in g.neighbors(q) if w != x)
        c = cherry_rooted(g, x, within=rest)
        if c is not None:
            return _tiny_cherry_witness(prefix, c)
    return None


def detect_spiders_plus_tiny_cherry(
    g: Digraph, spiders: Digraph, prefix_len: int, within: Iterable[int] | None = None
) -> Witness | None:
    """Witness for ``disjoint_union(spiders, tiny_cherry(prefix_len))``."""
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")
    if not is_spider_forest(spiders):
        raise ValueError("pattern is not a spider forest")
    alive = set(range(g.n)) if within is None else set(within)
    seen = set()
    for phi in iter_induced_copies(g, spiders, alive):
        image = frozenset(phi.values())
        if image in seen:
            continue
        seen.add(image)
        rest = alive - image
        for v in image:
            rest.difference_update(g.neighbors(v))
        w = detect_tiny_cherry(g, prefix_len, rest)
        if w is not None:
            return merge_witnesses([(copy_witness(spiders, phi), 0), (w, spiders.n)])
    return None


def spiders_plus_tiny_cherry_pattern(spiders: Digraph, prefix_len: int) -> Digraph:
    return disjoint_union(spiders, tiny_cherry(prefix_len))


def ibfs_tree_problems(g: Digraph, tree: IbfsTree) -> list[str]:
    """Check that the tree is an induced out-tree of g."""
    members = tree.vertices
    arcs = {(a, b) for a in members for b in g.successors(a) if b in members}
    expected = {(p, c) for c, p in tree.parent.items()}
    if arcs != expected:
        return [f"induced arcs {sorted(arcs)} differ from tree arcs {sorted(expected)}"]
    return []

