"""Random digraphs, random DIDPP instances and isomorphism-class enumeration."""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import permutations

import numpy as np

from .digraph import Digraph
from .oracle import DidppInstance


def _rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_digraph(n: int, p: float, seed=None) -> Digraph:
    """D(n, p): each ordered pair is an arc independently with probability p."""
    rng = _rng(seed)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < p]
    return Digraph(n, arcs)


def random_oriented(n: int, p: float, seed=None) -> Digraph:
    """Each unordered pair gets an arc with probability p, oriented by a fair coin."""
    rng = _rng(seed)
    arcs = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                arcs.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, arcs)


def random_didpp(n: int, p: float, seed=None, *, plant: bool | None = None, attempts: int = 1000) -> DidppInstance:
    """Random acyclic instance; optionally plants one directed path per terminal pair."""
    if n < 4:
        raise ValueError("DIDPP needs at least four vertices")
    rng = _rng(seed)
    for _ in range(attempts):
        order = list(range(n))
        rng.shuffle(order)
        arcs = {(order[i], order[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p}
        a, b, c, d = sorted(rng.sample(range(n), 4))
        s1, t1, s2, t2 = rng.choice([(a, b, c, d), (a, c, b, d), (a, d, b, c)])
        if plant if plant is not None else rng.random() < 0.5:
            free = [i for i in range(n) if i not in (s1, t1, s2, t2)]
            for s, t in ((s1, t1), (s2, t2)):
                inner = sorted(i for i in free if s < i < t and rng.random() < 0.5)
                free = [i for i in free if i not in inner]
                stops = [s, *inner, t]
                arcs.update((order[x], order[y]) for x, y in zip(stops, stops[1:]))
        try:
            return DidppInstance(Digraph(n, arcs), order[s1], order[t1], order[s2], order[t2])
        except ValueError:
            continue
    raise RuntimeError("could not draw a valid DIDPP instance")


# isomorphism classes


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _canonical(codes: np.ndarray, n: int) -> np.ndarray:
    """Smallest code over all vertex permutations; bit i of a code is the i-th ordered pair."""
    pairs = _pairs(n)
    index = {pr: i for i, pr in enumerate(pairs)}
    best = None
    for perm in permutations(range(n)):
        out = np.zeros_like(codes)
        for i, (u, v) in enumerate(pairs):
            j = index[(perm[u], perm[v])]
            out |= ((codes >> np.uint32(i)) & np.uint32(1)) << np.uint32(j)
        best = out if best is None else np.minimum(best, out)
    return best


@lru_cache(maxsize=None)
def _class_codes(n: int) -> tuple[int, ...]:
    if n <= 1:
        return (0,)
    prev = np.array(_class_codes(n - 1), dtype=np.uint32)
    old_pairs, new_pairs = _pairs(n - 1), _pairs(n)
    index = {pr: i for i, pr in enumerate(new_pairs)}
    # re-index the (n-1)-vertex codes into the n-vertex pair numbering
    base = np.zeros_like(prev)
    for i, pr in enumerate(old_pairs):
        base |= ((prev >> np.uint32(i)) & np.uint32(1)) << np.uint32(index[pr])
    new_bits = [index[(u, n - 1)] for u in range(n - 1)] + [index[(n - 1, u)] for u in range(n - 1)]
    ext = np.arange(1 << len(new_bits), dtype=np.uint32)
    extra = np.zeros_like(ext)
    for k, bit in enumerate(new_bits):
        extra |= ((ext >> np.uint32(k)) & np.uint32(1)) << np.uint32(bit)
    codes = (base[:, None] | extra[None, :]).ravel()
    return tuple(int(c) for c in np.unique(_canonical(codes, n)))


def _decode(code: int, n: int) -> Digraph:
    return Digraph(n, [pr for i, pr in enumerate(_pairs(n)) if code >> i & 1])


def iso_classes(n: int, oriented: bool = False) -> list[Digraph]:
    """One representative per isomorphism class of digraphs on ``n`` vertices (n <= 5)."""
    if not 0 <= n <= 5:
        raise ValueError("enumeration is limited to n <= 5")
    if n == 0:
        return [Digraph(0)]
    graphs = [_decode(c, n) for c in _class_codes(n)]
    if oriented:
        graphs = [g for g in graphs if not any(g.has_arc(v, u) for u, v in g.arcs)]
    return graphs
