"""Vertex-disjoint directed paths by unit-capacity flow with vertex splitting.

Only flow values up to two are ever needed, so the engine is a plain
Ford-Fulkerson loop with BFS augmentation in ascending vertex order.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .digraph import Digraph


def disjoint_paths(
    g: Digraph,
    sources: Iterable[int],
    sinks: Iterable[int],
    *,
    k: int = 2,
    shared: Iterable[int] = (),
    within: Iterable[int] | None = None,
) -> list[list[int]] | None:
    """Find ``k`` directed paths from ``sources`` to ``sinks``.

    Paths are distinct, use no arc twice, and share no vertex outside
    ``shared``.  Each path starts at its last source vertex and stops at its
    first sink vertex.  Returns ``None`` when fewer than ``k`` exist.
    """
    srcs = set(sources)
    snks = set(sinks)
    if srcs & snks:
        raise ValueError("sources and sinks must be disjoint")
    shared = set(shared)
    alive = set(range(g.n)) if within is None else set(within)
    srcs &= alive
    snks &= alive
    if not srcs or not snks:
        return None

    # node 2v = v_in, 2v+1 = v_out; S = 2n, T = 2n+1
    S, T = 2 * g.n, 2 * g.n + 1
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {}

    def add(u, v, c):
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)

    for v in alive:
        add(2 * v, 2 * v + 1, k if v in shared else 1)
        for w in g.successors(v):
            if w in alive:
                add(2 * v + 1, 2 * w, 1)
    for s in srcs:
        add(S, 2 * s, k)
    for t in snks:
        add(2 * t + 1, T, k)
    order = {u: sorted(vs) for u, vs in adj.items()}
    original = {e: c for e, c in cap.items()}

    for _ in range(k):
        parent = {S: S}
        queue = deque([S])
        while queue and T not in parent:
            u = queue.popleft()
            for v in order.get(u, ()):
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if T not in parent:
            return None
        v = T
        while v != S:
            u = parent[v]
            cap[(u, v)] -= 1
            cap[(v, u)] += 1
            v = u

    flow = {e: original[e] - cap[e] for e in original if original[e] > 0 and original[e] - cap[e] > 0}
    paths = []
    for _ in range(k):
        node = S
        walk = []
        while node != T:
            nxt = next(v for v in order[node] if flow.get((node, v), 0) > 0)
            flow[(node, nxt)] -= 1
            if nxt != T and nxt % 2 == 0:
                walk.append(nxt // 2)
            node = nxt
        paths.append(_trim(_shortcut(walk), srcs, snks))
    return paths


def _shortcut(walk: list[int]) -> list[int]:
    """Remove closed sub-walks so every vertex appears once."""
    out: list[int] = []
    pos: dict[int, int] = {}
    for v in walk:
        if v in pos:
            del out[pos[v] + 1:]
            pos = {w: i for i, w in enumerate(out)}
        else:
            pos[v] = len(out)
            out.append(v)
    return out


def _trim(path: list[int], srcs: set[int], snks: set[int]) -> list[int]:
    end = next(i for i, v in enumerate(path) if v in snks)
    path = path[: end + 1]
    start = max(i for i, v in enumerate(path) if v in srcs)
    return path[start:]


def two_paths_into(
    g: Digraph, s1: int, s2: int, sink: int, within: Iterable[int] | None = None
) -> tuple[list[int], list[int]] | None:
    """Directed ``(s1, sink)`` and ``(s2, sink)`` paths sharing only ``sink``."""
    if len({s1, s2, sink}) < 3:
        raise ValueError("s1, s2 and sink must be distinct")
    paths = disjoint_paths(g, (s1, s2), (sink,), shared=(sink,), within=within)
    if paths is None:
        return None
    p, q = paths
    return (p, q) if p[0] == s1 else (q, p)


def two_paths_from(
    g: Digraph, source: int, t1: int, t2: int, within: Iterable[int] | None = None
) -> tuple[list[int], list[int]] | None:
    """Directed ``(source, t1)`` and ``(source, t2)`` paths sharing only ``source``."""
    res = two_paths_into(g.converse(), t1, t2, source, within)
    if res is None:
        return None
    return res[0][::-1], res[1][::-1]


def two_paths_set_to_vertex(
    g: Digraph, xs: Iterable[int], z: int, within: Iterable[int] | None = None
) -> tuple[list[int], list[int]] | None:
    """Two distinct ``(X, z)``-paths, internally disjoint and avoiding X inside."""
    xs = set(xs) - {z}
    paths = disjoint_paths(g, xs, (z,), shared=xs | {z}, within=within)
    return None if paths is None else (paths[0], paths[1])


def two_paths_vertex_to_set(
    g: Digraph, z: int, ys: Iterable[int], within: Iterable[int] | None = None
) -> tuple[list[int], list[int]] | None:
    res = two_paths_set_to_vertex(g.converse(), ys, z, within)
    if res is None:
        return None
    return res[0][::-1], res[1][::-1]
