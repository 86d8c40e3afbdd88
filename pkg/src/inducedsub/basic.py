"""Polynomial detectors for directed paths, spider forests and one extra cycle."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from .digraph import Digraph, disjoint_union, is_oriented, is_spider_forest
from .families import directed_cycle
from .witness import Witness, cycle_witness, merge_witnesses, path_witness


def _alive(g: Digraph, within) -> set[int]:
    return set(range(g.n)) if within is None else set(within)


def iter_induced_copies(g: Digraph, d: Digraph, within: Iterable[int] | None = None) -> Iterator[dict[int, int]]:
    """Induced embeddings of ``d`` (maps V(d) -> V(g)) in a deterministic order."""
    alive = _alive(g, within)
    # visit pattern vertices so that each one after the first of its component has a mapped neighbour
    order = []
    seen = set()
    for r in range(d.n):
        if r in seen:
            continue
        seen.add(r)
        queue = deque([r])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in d.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    anchor = {}
    placed = set()
    for u in order:
        anchor[u] = next((w for w in d.neighbors(u) if w in placed), None)
        placed.add(u)
    phi: dict[int, int] = {}
    used: set[int] = set()

    def extend(i):
        if i == len(order):
            yield dict(phi)
            return
        a = order[i]
        if anchor[a] is None:
            cands = sorted(alive)
        else:
            cands = g.neighbors(phi[anchor[a]])
        for x in cands:
            if x in used or x not in alive:
                continue
            if g.in_degree(x) < d.in_degree(a) or g.out_degree(x) < d.out_degree(a):
                continue
            if any(d.has_arc(a, b) != g.has_arc(x, y) or d.has_arc(b, a) != g.has_arc(y, x) for b, y in phi.items()):
                continue
            phi[a] = x
            used.add(x)
            yield from extend(i + 1)
            del phi[a]
            used.discard(x)

    yield from extend(0)


def copy_witness(d: Digraph, phi: dict[int, int]) -> Witness:
    return Witness(dict(phi), {(a, b): (phi[a], phi[b]) for a, b in d.arcs})


def iter_induced_oriented_paths(g: Digraph, directions, within: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Induced paths ``v0..vk`` whose i-th arc is ``vi -> vi+1`` (+1) or ``vi+1 -> vi`` (-1)."""
    alive = _alive(g, within)
    directions = tuple(directions)
    path: list[int] = []

    def extend():
        i = len(path) - 1
        if i == len(directions):
            yield tuple(path)
            return
        last = path[-1]
        step = g.successors(last) if directions[i] > 0 else g.predecessors(last)
        for w in step:
            if w not in alive or w in path:
                continue
            if g.has_arc(w, last) and g.has_arc(last, w):
                continue
            if any(g.adjacent(w, u) for u in path[:-1]):
                continue
            path.append(w)
            yield from extend()
            path.pop()

    for s in sorted(alive):
        path.append(s)
        yield from extend()
        path.pop()


def detect_Pk(g: Digraph, k: int, within: Iterable[int] | None = None) -> Witness | None:
    """Induced directed path on ``k`` vertices (equivalent to a P_k-subdivision)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    path = next(iter_induced_oriented_paths(g, [1] * (k - 1), within), None)
    return None if path is None else path_witness(path)


def detect_spider_forest(g: Digraph, d: Digraph, within: Iterable[int] | None = None) -> Witness | None:
    if not is_spider_forest(d):
        raise ValueError("pattern is not a spider forest")
    phi = next(iter_induced_copies(g, d, within), None)
    return None if phi is None else copy_witness(d, phi)


def shortest_cycle(g: Digraph, within: Iterable[int] | None = None) -> list[int] | None:
    """A shortest directed cycle (hence chordless), found by BFS from every vertex."""
    alive = _alive(g, within)
    best = None
    for s in sorted(alive):
        parent = {s: None}
        queue = deque([s])
        found = None
        while queue and found is None:
            u = queue.popleft()
            for v in g.successors(u):
                if v not in alive:
                    continue
                if v == s:
                    found = u
                    break
                if v not in parent:
                    parent[v] = u
                    queue.append(v)
        if found is None:
            continue
        cycle = [found]
        while cycle[-1] != s:
            cycle.append(parent[cycle[-1]])
        cycle.reverse()
        if best is None or len(cycle) < len(best):
            best = cycle
            if len(best) == 2:
                break
    return best


def detect_C2_subdivision(g: Digraph, within: Iterable[int] | None = None) -> Witness | None:
    cycle = shortest_cycle(g, within)
    return None if cycle is None else cycle_witness(cycle, 2)


def detect_C3_oriented(g: Digraph, within: Iterable[int] | None = None) -> Witness | None:
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")
    cycle = shortest_cycle(g, within)
    return None if cycle is None else cycle_witness(cycle, 3)


def detect_spiders_plus_cycle(
    g: Digraph, spiders: Digraph, cycle_kind: int, within: Iterable[int] | None = None
) -> Witness | None:
    """Induced copy A of the spider forest plus a directed cycle in G - (A u N(A)).

    The witness is for the pattern ``disjoint_union(spiders, directed_cycle(cycle_kind))``.
    """
    if cycle_kind not in (2, 3):
        raise ValueError("cycle kind must be 2 or 3")
    if not is_spider_forest(spiders):
        raise ValueError("pattern is not a spider forest")
    if cycle_kind == 3 and not is_oriented(g):
        raise ValueError("host graph must be oriented for a C3 pattern")
    alive = _alive(g, within)
    seen = set()
    for phi in iter_induced_copies(g, spiders, alive):
        image = frozenset(phi.values())
        if image in seen:
            continue
        seen.add(image)
        rest = alive - image
        for v in image:
            rest.difference_update(g.neighbors(v))
        cycle = shortest_cycle(g, rest)
        if cycle is not None:
            return merge_witnesses([(copy_witness(spiders, phi), 0), (cycle_witness(cycle, cycle_kind), spiders.n)])
    return None


def spiders_plus_cycle_pattern(spiders: Digraph, cycle_kind: int) -> Digraph:
    return disjoint_union(spiders, directed_cycle(cycle_kind))

