"""Simple digraphs, vertex classes, skeletons and traversals.

Vertices are dense integer ids ``0..n-1``.  Labels are optional side data
used by the gadget generators; no algorithm looks at them.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Arc = tuple[int, int]


class Digraph:
    """Immutable simple digraph (2-cycles allowed, no loops)."""

    __slots__ = ("n", "arcs", "labels", "_succ", "_pred", "_nbrs", "_succ_set", "_pred_set")

    def __init__(self, n: int, arcs: Iterable[Arc] = (), labels: Mapping[int, str] | None = None):
        if n < 0:
            raise ValueError("negative vertex count")
        arcset = set()
        for u, v in arcs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            arcset.add((u, v))
        self.n = n
        self.arcs = frozenset(arcset)
        self.labels = dict(labels or {})
        for v in self.labels:
            if not 0 <= v < n:
                raise ValueError(f"label for unknown vertex {v}")
        succ = [[] for _ in range(n)]
        pred = [[] for _ in range(n)]
        for u, v in self.arcs:
            succ[u].append(v)
            pred[v].append(u)
        self._succ = tuple(tuple(sorted(s)) for s in succ)
        self._pred = tuple(tuple(sorted(p)) for p in pred)
        self._succ_set = tuple(frozenset(s) for s in succ)
        self._pred_set = tuple(frozenset(p) for p in pred)
        self._nbrs = tuple(tuple(sorted(set(s) | set(p))) for s, p in zip(succ, pred))

    # queries

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_arcs(self) -> list[Arc]:
        return sorted(self.arcs)

    def successors(self, v: int) -> tuple[int, ...]:
        return self._succ[v]

    def predecessors(self, v: int) -> tuple[int, ...]:
        return self._pred[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def succ_set(self, v: int) -> frozenset[int]:
        return self._succ_set[v]

    def pred_set(self, v: int) -> frozenset[int]:
        return self._pred_set[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._succ_set[u]

    def adjacent(self, u: int, v: int) -> bool:
        return v in self._succ_set[u] or u in self._succ_set[v]

    def out_degree(self, v: int) -> int:
        return len(self._succ[v])

    def in_degree(self, v: int) -> int:
        return len(self._pred[v])

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def vertex_by_label(self, name: str) -> int:
        for v, lab in self.labels.items():
            if lab == name:
                return v
        raise KeyError(name)

    # derived graphs

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Induced subgraph on ``vertices`` relabelled in ascending order.

        Returns the subgraph and the tuple mapping new ids to old ids.
        """
        keep = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(keep)}
        arcs = [(index[u], index[v]) for u in keep for v in self._succ[u] if v in index]
        labels = {index[v]: lab for v, lab in self.labels.items() if v in index}
        return Digraph(len(keep), arcs, labels), keep

    def converse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for u, v in self.arcs), self.labels)

    def with_arcs(self, add: Iterable[Arc] = (), remove: Iterable[Arc] = ()) -> "Digraph":
        arcs = (set(self.arcs) - set(remove)) | set(add)
        return Digraph(self.n, arcs, self.labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.arcs == other.arcs and self.labels == other.labels

    def __hash__(self) -> int:
        return hash((self.n, self.arcs))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.sorted_arcs()})"


def disjoint_union(*graphs: Digraph) -> Digraph:
    """Disjoint union; the vertices of each graph are shifted past the previous ones."""
    arcs = []
    labels = {}
    offset = 0
    for g in graphs:
        arcs.extend((u + offset, v + offset) for u, v in g.arcs)
        labels.update({v + offset: lab for v, lab in g.labels.items()})
        offset += g.n
    return Digraph(offset, arcs, labels)


def is_oriented(g: Digraph) -> bool:
    return not any(g.has_arc(v, u) for u, v in g.arcs)


def topological_order(g: Digraph) -> list[int] | None:
    """Kahn's algorithm; ``None`` when the graph has a directed cycle."""
    indeg = [g.in_degree(v) for v in range(g.n)]
    queue = deque(v for v in range(g.n) if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for v in g.successors(u):
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    return order if len(order) == g.n else None


def is_acyclic(g: Digraph) -> bool:
    return topological_order(g) is not None


def weak_components(g: Digraph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest vertex."""
    alive = set(range(g.n)) if within is None else set(within)
    seen = set()
    comps = []
    for s in sorted(alive):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in alive and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def bfs_path(g: Digraph, source: int, target: int, allowed: set[int] | frozenset[int] | None = None) -> list[int] | None:
    """Shortest directed path inside ``allowed``, neighbours scanned by ascending id."""
    if allowed is not None and (source not in allowed or target not in allowed):
        return None
    if source == target:
        return [source]
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.successors(u):
            if v in parent or (allowed is not None and v not in allowed):
                continue
            parent[v] = u
            if v == target:
                path = [v]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(v)
    return None


class VertexClass(Enum):
    LEAF = "leaf"
    NODE = "node"
    CONTINUITY = "continuity"
    ISOLATED = "isolated"


def vertex_class(g: Digraph, v: int) -> VertexClass:
    din, dout = g.in_degree(v), g.out_degree(v)
    if din >= 2 or dout >= 2:
        return VertexClass.NODE
    if din + dout == 0:
        return VertexClass.ISOLATED
    if din + dout == 1:
        return VertexClass.LEAF
    return VertexClass.CONTINUITY


def classify_vertices(g: Digraph) -> dict[int, VertexClass]:
    return {v: vertex_class(g, v) for v in range(g.n)}


@dataclass(frozen=True)
class Skeleton:
    """Branch contraction of a digraph.

    ``arcs[i]`` is the skeleton arc obtained by contracting ``branches[i]``.
    ``cycles`` lists the components made only of continuities; they have no
    node or leaf and therefore no skeleton vertex.
    """

    vertices: tuple[int, ...]
    arcs: tuple[Arc, ...]
    branches: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]

    def is_isomorphic(self, other: "Skeleton") -> bool:
        """Brute-force multidigraph isomorphism (small skeletons only)."""
        if len(self.vertices) != len(other.vertices) or len(self.arcs) != len(other.arcs):
            return False
        if len(self.cycles) != len(other.cycles):
            return False
        target = Counter(other.arcs)
        for perm in permutations(other.vertices):
            phi = dict(zip(self.vertices, perm))
            if Counter((phi[u], phi[v]) for u, v in self.arcs) == target:
                return True
        return False


def skeleton(g: Digraph) -> Skeleton:
    classes = classify_vertices(g)
    ends = [v for v in range(g.n) if classes[v] in (VertexClass.NODE, VertexClass.LEAF)]
    arcs = []
    branches = []
    covered = set()
    for u in ends:
        for w in g.successors(u):
            path = [u, w]
            while classes[path[-1]] is VertexClass.CONTINUITY:
                covered.add(path[-1])
                path.append(g.successors(path[-1])[0])
            arcs.append((u, path[-1]))
            branches.append(tuple(path))
    cycles = []
    for v in range(g.n):
        if classes[v] is VertexClass.CONTINUITY and v not in covered:
            cycle = [v]
            covered.add(v)
            w = g.successors(v)[0]
            while w != v:
                cycle.append(w)
                covered.add(w)
                w = g.successors(w)[0]
            cycles.append(tuple(cycle))
    return Skeleton(tuple(ends), tuple(arcs), tuple(branches), tuple(cycles))


def central_branches(g: Digraph) -> list[tuple[int, ...]]:
    """Branches whose two ends are nodes, in lexicographic order."""
    classes = classify_vertices(g)
    sk = skeleton(g)
    return sorted(
        b for b in sk.branches
        if classes[b[0]] is VertexClass.NODE and classes[b[-1]] is VertexClass.NODE
    )


def is_spider_forest(g: Digraph) -> bool:
    for comp in weak_components(g):
        members = set(comp)
        arcs = sum(1 for u in comp for v in g.successors(u) if v in members)
        if arcs != len(comp) - 1:
            return False
        if sum(1 for v in comp if vertex_class(g, v) is VertexClass.NODE) > 1:
            return False
    return True


def subdivide(d: Digraph, lengths: Mapping[Arc, int]) -> Digraph:
    """Replace each arc by a directed path with ``lengths[arc]`` arcs.

    Fresh vertices are appended after the original ones, arc by arc in
    lexicographic order.
    """
    arcs = []
    n = d.n
    for a in d.sorted_arcs():
        if a not in lengths:
            raise KeyError(f"no length for arc {a}")
        length = int(lengths[a])
        if length < 1:
            raise ValueError(f"length of arc {a} must be positive")
        path = [a[0]] + list(range(n, n + length - 1)) + [a[1]]
        n += length - 1
        arcs.extend(zip(path, path[1:]))
    return Digraph(n, arcs, d.labels)


def subdivide_uniform(d: Digraph, length: int) -> Digraph:
    return subdivide(d, {a: length for a in d.arcs})


def iter_chordless_cycles(g: Digraph, min_length: int = 2, within: Iterable[int] | None = None):
    """Yield every induced directed cycle once, rotated to start at its smallest vertex."""
    alive = set(range(g.n)) if within is None else set(within)
    for s in sorted(alive):
        path = [s]
        on_path = {s}
        # blocked[w] counts internal path vertices adjacent to w
        blocked = Counter()

        def extend():
            last = path[-1]
            for w in g.successors(last):
                if w <= s or w not in alive or w in on_path or blocked[w]:
                    continue
                if g.has_arc(w, last):
                    continue
                if len(path) > 1 and g.has_arc(s, w):
                    continue
                if g.has_arc(w, s):
                    if len(path) + 1 >= min_length:
                        yield tuple(path + [w])
                    continue
                if len(path) > 1:
                    for x in g.neighbors(last):
                        blocked[x] += 1
                path.append(w)
                on_path.add(w)
                yield from extend()
                path.pop()
                on_path.discard(w)
                if len(path) > 1:
                    for x in g.neighbors(last):
                        blocked[x] -= 1

        if g.has_arc(s, s):
            continue
        for w in g.successors(s):
            if w <= s or w not in alive:
                continue
            if g.has_arc(w, s):
                if min_length <= 2:
                    yield (s, w)
                continue
            path.append(w)
            on_path.add(w)
            yield from extend()
            path.pop()
            on_path.discard(w)


def induced_arcs(g: Digraph, vertices: Iterable[int]) -> set[Arc]:
    members = set(vertices)
    return {(u, v) for u in members for v in g.successors(u) if v in members}


def is_directed_path(g: Digraph, seq: Sequence[int]) -> bool:
    return len(set(seq)) == len(seq) and all(g.has_arc(u, v) for u, v in zip(seq, seq[1:]))
