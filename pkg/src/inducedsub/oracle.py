"""Exponential ground-truth solvers.

Two independent induced-subdivision searches live here.  The subset oracle
scans vertex subsets by increasing size, screening them in bulk with numpy
before the exact contraction test.  The routing oracle grows node images and
induced branch paths by backtracking; it has no size bound and is meant for
large sparse gadget graphs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Mapping, Sequence

import numpy as np

from .digraph import Digraph, is_acyclic, is_oriented
from .witness import Witness

DEFAULT_MAX_N = 16
MAX_PATTERN_N = 8
_CHUNK = 1 << 20


class OracleBoundError(ValueError):
    pass


# subset oracle


def _bulk_screen(g: Digraph, d: Digraph, fixed_mask: int) -> np.ndarray:
    """Masks of subsets whose arc count and non-(1,1) degree profile match ``d``."""
    n = g.n
    in_mask = np.array([sum(1 << u for u in g.predecessors(v)) for v in range(n)], dtype=np.int64)
    out_mask = np.array([sum(1 << w for w in g.successors(v)) for v in range(n)], dtype=np.int64)
    profiles = Counter((d.in_degree(v), d.out_degree(v)) for v in range(d.n))
    profiles.pop((1, 1), None)
    special_total = sum(profiles.values())
    excess = d.m - d.n
    survivors = []
    for start in range(0, 1 << n, _CHUNK):
        masks = np.arange(start, min(1 << n, start + _CHUNK), dtype=np.int64)
        size = np.bitwise_count(masks).astype(np.int64)
        keep = size >= d.n
        if fixed_mask:
            keep &= (masks & fixed_mask) == fixed_mask
        if not keep.any():
            continue
        masks, size = masks[keep], size[keep]
        arcs = np.zeros(len(masks), dtype=np.int64)
        special = np.zeros(len(masks), dtype=np.int64)
        counts = {p: np.zeros(len(masks), dtype=np.int64) for p in profiles}
        for v in range(n):
            inside = ((masks >> v) & 1).astype(bool)
            ind = np.bitwise_count(masks & in_mask[v])
            outd = np.bitwise_count(masks & out_mask[v])
            arcs += np.where(inside, outd, 0)
            special += inside & ~((ind == 1) & (outd == 1))
            for (pi, po), arr in counts.items():
                arr += inside & (ind == pi) & (outd == po)
        keep = (arcs - size == excess) & (special == special_total)
        for p, arr in counts.items():
            keep &= arr == profiles[p]
        survivors.append(masks[keep])
    if not survivors:
        return np.zeros(0, dtype=np.int64)
    return np.concatenate(survivors)


def _ordered_subsets(masks: np.ndarray, n: int) -> list[tuple[int, ...]]:
    subsets = [tuple(v for v in range(n) if (int(m) >> v) & 1) for m in masks]
    subsets.sort(key=lambda s: (len(s), s))
    return subsets


def _isomorphisms(d: Digraph, marked: Sequence[int], arcs: Mapping, fixed: Mapping[int, int]):
    """Bijections V(d) -> marked that carry d's arcs exactly onto ``arcs``."""
    succ = {u: set() for u in marked}
    pred = {u: set() for u in marked}
    for u, t in arcs:
        succ[u].add(t)
        pred[t].add(u)
    order = sorted(range(d.n), key=lambda a: (a not in fixed, -len(d.neighbors(a)), a))
    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(i):
        if i == len(order):
            yield dict(phi)
            return
        a = order[i]
        cands = [fixed[a]] if a in fixed else marked
        for x in cands:
            if x in used or x not in succ:
                continue
            if len(succ[x]) != d.out_degree(a) or len(pred[x]) != d.in_degree(a):
                continue
            if any((b in d.succ_set(a)) != (phi[b] in succ[x]) or (b in d.pred_set(a)) != (phi[b] in pred[x])
                   for b in phi):
                continue
            phi[a] = x
            used.add(x)
            yield from extend(i + 1)
            del phi[a]
            used.discard(x)

    yield from extend(0)


def _subset_witnesses(g: Digraph, d: Digraph, members: tuple[int, ...], fixed: Mapping[int, int]):
    mem = set(members)
    succ = {v: [w for w in g.successors(v) if w in mem] for v in members}
    pred = {v: [w for w in g.predecessors(v) if w in mem] for v in members}
    branchy = [v for v in members if (len(pred[v]), len(succ[v])) != (1, 1)]
    conts = [v for v in members if (len(pred[v]), len(succ[v])) == (1, 1)]
    k = d.n - len(branchy)
    if k < 0 or k > len(conts):
        return
    for extra in combinations(conts, k):
        marked = set(branchy) | set(extra)
        arcs = {}
        covered = set(marked)
        ok = True
        for u in sorted(marked):
            for w in succ[u]:
                path = [u, w]
                while path[-1] not in marked:
                    covered.add(path[-1])
                    path.append(succ[path[-1]][0])
                t = path[-1]
                if t == u or (u, t) in arcs:
                    ok = False
                    break
                arcs[(u, t)] = tuple(path)
            if not ok:
                break
        if not ok or covered != mem:
            continue
        for phi in _isomorphisms(d, sorted(marked), arcs, fixed):
            yield Witness(phi, {(a, b): arcs[(phi[a], phi[b])] for a, b in d.arcs})


def iter_subdivisions(
    g: Digraph,
    d: Digraph,
    *,
    max_n: int = DEFAULT_MAX_N,
    fixed: Mapping[int, int] | None = None,
    require_oriented_g: bool = False,
) -> Iterator[Witness]:
    """One witness per vertex subset inducing a D-subdivision, in subset order.

    Subsets are ordered by size, then lexicographically.  ``fixed`` pins
    pattern vertices to host vertices (used for rooted searches).
    """
    if g.n > max_n:
        raise OracleBoundError(f"host has {g.n} vertices, oracle bound is {max_n}")
    if d.n > MAX_PATTERN_N:
        raise OracleBoundError(f"pattern has {d.n} vertices, at most {MAX_PATTERN_N} supported")
    if require_oriented_g and not is_oriented(g):
        raise ValueError("host graph is not oriented")
    fixed = dict(fixed or {})
    if g.n == 0 or d.n > g.n:
        if d.n == 0:
            yield Witness({}, {})
        return
    fixed_mask = sum(1 << v for v in fixed.values())
    for members in _ordered_subsets(_bulk_screen(g, d, fixed_mask), g.n):
        w = next(_subset_witnesses(g, d, members, fixed), None)
        if w is not None:
            yield w


def oracle_find_subdivision(
    g: Digraph,
    d: Digraph,
    require_oriented_g: bool = False,
    *,
    max_n: int = DEFAULT_MAX_N,
    fixed: Mapping[int, int] | None = None,
) -> Witness | None:
    return next(iter_subdivisions(g, d, max_n=max_n, fixed=fixed, require_oriented_g=require_oriented_g), None)


# routing oracle


def _arc_order(d: Digraph) -> list[tuple[int, int]]:
    """Arcs ordered so that endpoints get mapped as early as possible."""
    remaining = d.sorted_arcs()
    mapped: set[int] = set()
    order = []
    while remaining:
        def rank(arc):
            t, h = arc
            return (not (t in mapped and h in mapped), t not in mapped, h not in mapped, arc)
        best = min(remaining, key=rank)
        remaining.remove(best)
        order.append(best)
        mapped.update(best)
    return order


def search_subdivisions(g: Digraph, d: Digraph, *, fixed: Mapping[int, int] | None = None) -> Iterator[Witness]:
    """Backtracking search over node images and induced branch paths.

    Yields witnesses (possibly several per vertex set).  Every pair of chosen
    vertices is checked for adjacency when the later one is added, so the
    result is induced by construction.
    """
    if d.n > MAX_PATTERN_N:
        raise OracleBoundError(f"pattern has {d.n} vertices, at most {MAX_PATTERN_N} supported")
    fixed = dict(fixed or {})
    arcs = _arc_order(d)
    phi: dict[int, int] = {}
    owner: dict[int, int] = {}  # host vertex -> pattern vertex, for node images
    inner: set[int] = set()
    routed: dict[tuple[int, int], tuple[int, ...]] = {}

    def adjacency_ok_for_node(b: int, w: int, p: int | None, current) -> bool:
        # arcs to other node images must be future single-arc branches
        for x in g.neighbors(w):
            if x == p:
                if not g.has_arc(p, w):
                    return False
                if g.has_arc(w, p):
                    c = owner.get(p)
                    if c is None or (b, c) not in d.arcs or (b, c) in routed:
                        return False
                continue
            if x in inner:
                return False
            c = owner.get(x)
            if c is None:
                continue
            if g.has_arc(w, x) and ((b, c) not in d.arcs or (b, c) in routed or (b, c) == current):
                return False
            if g.has_arc(x, w) and ((c, b) not in d.arcs or (c, b) in routed or (c, b) == current):
                return False
        return True

    def candidates(a: int):
        if a in fixed:
            return [fixed[a]]
        return range(g.n)

    def place(a: int, w: int, p: int | None, current=None) -> bool:
        if w in owner or w in inner:
            return False
        if g.in_degree(w) < d.in_degree(a) or g.out_degree(w) < d.out_degree(a):
            return False
        if a in fixed and fixed[a] != w:
            return False
        return adjacency_ok_for_node(a, w, p, current)

    def step(i: int):
        if i == len(arcs):
            yield from finish()
            return
        a, b = arcs[i]
        if a in phi:
            yield from route(i, [phi[a]])
            return
        for w in candidates(a):
            if place(a, w, None):
                phi[a] = w
                owner[w] = a
                yield from route(i, [w])
                del phi[a]
                del owner[w]

    def finish():
        isolated = [a for a in range(d.n) if a not in phi]
        if not isolated:
            yield Witness(dict(phi), dict(routed))
            return
        a = isolated[0]
        for w in candidates(a):
            if place(a, w, None):
                phi[a] = w
                owner[w] = a
                yield from finish()
                del phi[a]
                del owner[w]

    def route(i: int, path: list[int]):
        a, b = arcs[i]
        p = path[-1]
        t = phi.get(b)
        if t is not None:
            if g.has_arc(p, t):
                if g.has_arc(t, p) and len(path) > 1:
                    return
                routed[(a, b)] = tuple(path) + (t,)
                yield from step(i + 1)
                del routed[(a, b)]
                return
        for w in g.successors(p):
            if w in owner or w in inner:
                continue
            if t is None and place(b, w, p, (a, b)):
                phi[b] = w
                owner[w] = b
                routed[(a, b)] = tuple(path) + (w,)
                yield from step(i + 1)
                del routed[(a, b)]
                del phi[b]
                del owner[w]
            if b in fixed and t is None and fixed[b] == w:
                continue
            ok = True
            for x in g.neighbors(w):
                if x == p:
                    if g.has_arc(w, p):
                        ok = False
                        break
                elif x == t:
                    if g.has_arc(t, w):
                        ok = False
                        break
                elif x in owner or x in inner:
                    ok = False
                    break
            if not ok:
                continue
            inner.add(w)
            path.append(w)
            yield from route(i, path)
            path.pop()
            inner.discard(w)

    yield from step(0)


def search_subdivision(g: Digraph, d: Digraph, *, fixed: Mapping[int, int] | None = None) -> Witness | None:
    return next(search_subdivisions(g, d, fixed=fixed), None)


# induced paths


def iter_induced_paths(g: Digraph, a: int, b: int, within=None) -> Iterator[list[int]]:
    """Every induced directed (a,b)-path, by DFS with ascending neighbour order."""
    if a == b:
        raise ValueError("endpoints must differ")
    alive = None if within is None else set(within)
    if alive is not None and (a not in alive or b not in alive):
        return
    # vertices that can still reach b
    reach = {b}
    stack = [b]
    while stack:
        v = stack.pop()
        for u in g.predecessors(v):
            if u not in reach and (alive is None or u in alive):
                reach.add(u)
                stack.append(u)
    if a not in reach or g.has_arc(b, a):
        return
    path = [a]
    on_path = {a}
    blocked = Counter()  # neighbours of path[:-1]

    def extend():
        last = path[-1]
        for w in g.successors(last):
            if w in on_path or blocked[w] or w not in reach or g.has_arc(w, last):
                continue
            if w == b:
                yield path + [b]
                continue
            for x in g.neighbors(last):
                blocked[x] += 1
            path.append(w)
            on_path.add(w)
            if not blocked[b]:
                yield from extend()
            path.pop()
            on_path.discard(w)
            for x in g.neighbors(last):
                blocked[x] -= 1

    yield from extend()


def solve_induced_ab_path(g: Digraph, a: int, b: int, within=None) -> list[int] | None:
    return next(iter_induced_paths(g, a, b, within), None)


@dataclass(frozen=True)
class DidppInstance:
    """Disjoint induced directed path pair instance on an acyclic digraph."""

    g: Digraph
    s1: int
    t1: int
    s2: int
    t2: int

    def __post_init__(self):
        terms = (self.s1, self.t1, self.s2, self.t2)
        if len(set(terms)) != 4 or any(not 0 <= v < self.g.n for v in terms):
            raise ValueError("terminals must be four distinct vertices")
        if not is_acyclic(self.g):
            raise ValueError("DIDPP graph must be acyclic")
        reach = set()
        stack = [self.s2, self.t2]
        while stack:
            v = stack.pop()
            if v in reach:
                continue
            reach.add(v)
            stack.extend(self.g.successors(v))
        if self.s1 in reach or self.t1 in reach:
            raise ValueError("no directed path may lead from {s2, t2} to {s1, t1}")


def solve_didpp(inst: DidppInstance, max_n: int = 256) -> tuple[list[int], list[int]] | None:
    if inst.g.n > max_n:
        raise OracleBoundError(f"instance has {inst.g.n} vertices, bound is {max_n}")
    g = inst.g
    firsts = list(iter_induced_paths(g, inst.s1, inst.t1))
    if not firsts:
        return None
    for p2 in iter_induced_paths(g, inst.s2, inst.t2):
        s2 = set(p2)
        near2 = set(p2)
        for v in p2:
            near2.update(g.neighbors(v))
        for p1 in firsts:
            if not near2.intersection(p1) and not s2.intersection(p1):
                return p1, p2
    return None
