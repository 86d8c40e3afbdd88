"""Detectors for induced subdivisions of short oriented paths in oriented graphs.

All detectors return a :class:`PathWitness`: the vertex sequence of an
induced oriented path read from its origin, together with the direction of
each arc (+1 forward, -1 backward).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .basic import iter_induced_oriented_paths
from .digraph import Digraph, bfs_path, is_oriented
from .families import Direction, OrientedPathShape
from .flow import two_paths_into
from .witness import Witness


@dataclass(frozen=True)
class PathWitness:
    vertices: tuple[int, ...]
    directions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "directions", tuple(self.directions))
        if len(self.vertices) != len(self.directions) + 1:
            raise ValueError("need exactly one direction per arc")

    @property
    def shape(self) -> OrientedPathShape:
        return OrientedPathShape.from_directions(self.directions)

    @property
    def blocks(self) -> list[tuple[int, tuple[int, ...]]]:
        """Maximal directed segments as (direction, vertices) pairs."""
        out = []
        start = 0
        for i in range(1, len(self.directions) + 1):
            if i == len(self.directions) or self.directions[i] != self.directions[start]:
                out.append((self.directions[start], self.vertices[start:i + 1]))
                start = i
        return out

    def prepend(self, v: int, direction: int) -> "PathWitness":
        return PathWitness((v,) + self.vertices, (direction,) + self.directions)

    def converse(self) -> "PathWitness":
        return PathWitness(self.vertices, tuple(-d for d in self.directions))

    def problems(self, g: Digraph) -> list[str]:
        out = []
        if len(set(self.vertices)) != len(self.vertices):
            out.append("repeated vertex")
        arcs = set()
        for (u, v), d in zip(zip(self.vertices, self.vertices[1:]), self.directions):
            arc = (u, v) if d > 0 else (v, u)
            if not g.has_arc(*arc):
                out.append(f"missing arc {arc}")
            arcs.add(arc)
        members = set(self.vertices)
        extra = {(a, b) for a in members for b in g.successors(a) if b in members} - arcs
        if extra:
            out.append(f"extra arcs {sorted(extra)}")
        return out

    def to_witness(self, shape: OrientedPathShape) -> Witness:
        """Witness for ``shape.digraph()``; blocks may be longer than the pattern's."""
        mine = self.shape
        if len(mine.blocks) != len(shape.blocks) or mine.first != shape.first:
            raise ValueError(f"path shape {mine} does not subdivide {shape}")
        node_map: dict[int, int] = {}
        branches = {}
        p0 = f0 = 0
        sign = shape.first.value
        for want, have in zip(shape.blocks, mine.blocks):
            if have < want:
                raise ValueError(f"path shape {mine} does not subdivide {shape}")
            for i in range(want):
                seg = self.vertices[f0 + i: f0 + (i + 1 if i < want - 1 else have) + 1]
                node_map[p0 + i] = seg[0]
                if sign > 0:
                    branches[(p0 + i, p0 + i + 1)] = tuple(seg)
                else:
                    branches[(p0 + i + 1, p0 + i)] = tuple(seg[::-1])
            p0 += want
            f0 += have
            sign = -sign
        node_map[p0] = self.vertices[f0]
        return Witness(node_map, branches)

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "directions": list(self.directions), "shape": str(self.shape)}


def _require_oriented(g: Digraph) -> None:
    if not is_oriented(g):
        raise ValueError("host graph must be oriented")


def _alive(g: Digraph, within) -> set[int]:
    return set(range(g.n)) if within is None else set(within)


def _backward_arcs(g: Digraph, path) -> list[tuple[int, int]]:
    """Arcs ``(i, j)`` (positions) of G<V(path)> with ``path[i] -> path[j]`` and ``j < i``."""
    pos = {v: i for i, v in enumerate(path)}
    return [(i, pos[w]) for i, v in enumerate(path) for w in g.successors(v) if w in pos and pos[w] < i]


def detect_A2_rooted(g: Digraph, s: int, within: Iterable[int] | None = None, *, check: bool = True) -> PathWitness | None:
    """Induced A+_2-subdivision with origin ``s``: a directed path s..s2 plus an arc s3 -> s2."""
    if check:
        _require_oriented(g)
    alive = _alive(g, within)
    if s not in alive:
        return None
    in_s = set(g.predecessors(s))
    for s3, s2 in g.sorted_arcs():
        if s3 not in alive or s2 not in alive or s in (s3, s2) or s3 in in_s or s2 in in_s:
            continue
        removed = in_s | (set(g.neighbors(s3)) - {s2})
        if s in removed:
            continue
        allowed = alive - removed
        allowed.discard(s3)
        path = bfs_path(g, s, s2, allowed)
        if path is None:
            continue
        back = _backward_arcs(g, path)
        if not back:
            return PathWitness(tuple(path) + (s3,), (1,) * (len(path) - 1) + (-1,))
        i3, i2 = min(back, key=lambda a: (a[1], a[0], path[a[0]]))
        return PathWitness(tuple(path[: i2 + 1]) + (path[i3],), (1,) * i2 + (-1,))
    return None


def detect_A3_minus(g: Digraph, within: Iterable[int] | None = None) -> PathWitness | None:
    _require_oriented(g)
    alive = _alive(g, within)
    for s2, s1 in g.sorted_arcs():
        if s1 not in alive or s2 not in alive:
            continue
        rest = alive - {s1} - (set(g.neighbors(s1)) - {s2})
        w = detect_A2_rooted(g, s2, rest, check=False)
        if w is not None:
            return w.prepend(s1, -1)
    return None


def _prefix_directions(shape: OrientedPathShape) -> list[int]:
    """Directions of the first block plus the second block minus its last arc."""
    first = shape.first.value
    return [first] * shape.blocks[0] + [-first] * (shape.blocks[1] - 1)


def _prefixed_search(g: Digraph, prefix_dirs, within, tail_detector) -> PathWitness | None:
    alive = _alive(g, within)
    for q in iter_induced_oriented_paths(g, prefix_dirs, alive):
        s = q[-1]
        rest = set(alive)
        for v in q[:-1]:
            rest.discard(v)
            rest.difference_update(w for w in g.neighbors(v) if w != s)
        w = tail_detector(g, s, rest)
        if w is not None:
            return PathWitness(q + w.vertices[1:], tuple(prefix_dirs) + w.directions)
    return None


def detect_three_block_last1(g: Digraph, shape: OrientedPathShape, within: Iterable[int] | None = None) -> PathWitness | None:
    """Induced subdivision of a three-block path whose last block has length one."""
    if len(shape.blocks) != 3 or shape.blocks[2] != 1:
        raise ValueError("shape must have three blocks, the last of length one")
    _require_oriented(g)
    if shape.first is Direction.FORWARD:
        w = detect_three_block_last1(g.converse(), shape.converse(), within)
        return None if w is None else w.converse()
    return _prefixed_search(g, _prefix_directions(shape), within,
                            lambda h, s, rest: detect_A2_rooted(h, s, rest, check=False))


def detect_A3plus_rooted(g: Digraph, s: int, within: Iterable[int] | None = None, *, check: bool = True) -> PathWitness | None:
    """Induced A+_3-subdivision with origin ``s`` (a1 -> a2 <- a3 -> a4 subdivided)."""
    if check:
        _require_oriented(g)
    alive = _alive(g, within)
    a1 = s
    if a1 not in alive:
        return None
    arcs = [(u, v) for u, v in g.sorted_arcs() if u in alive and v in alive and a1 not in (u, v)]
    pred1 = set(g.predecessors(a1))
    for a2 in sorted(alive):
        if a2 == a1:
            continue
        succ2 = set(g.successors(a2))
        if a1 in succ2:
            continue
        for a3, a4 in arcs:
            if a2 in (a3, a4):
                continue
            removed = (set(g.neighbors(a4)) - {a3}) | pred1 | set(g.predecessors(a3)) | succ2
            if removed.intersection((a1, a2, a3, a4)):
                continue
            allowed = alive - removed
            allowed.discard(a4)
            found = two_paths_into(g, a1, a3, a2, allowed)
            if found is None:
                continue
            return _a3plus_witness(g, found, a4)
    return None


def _a3plus_witness(g: Digraph, found, a4: int) -> PathWitness:
    P0, Q0 = found
    # re-run BFS inside each path so that neither has a forward chord
    P = bfs_path(g, P0[0], P0[-1], set(P0))
    Q = bfs_path(g, Q0[0], Q0[-1], set(Q0))

    back = _backward_arcs(g, P)
    if back:
        i3, i2 = min(back, key=lambda a: (a[1], -a[0], P[a[0]]))
        return PathWitness(tuple(P[: i2 + 1]) + (P[i3], P[i3 + 1]), (1,) * i2 + (-1, 1))

    qpos = {v: j for j, v in enumerate(Q[:-1])}
    cross = []
    for i, x in enumerate(P[:-1]):
        for y in g.neighbors(x):
            j = qpos.get(y)
            if j is not None:
                cross.append((i + j, i, x, y, j))
    if cross:
        _, i, x, y, j = min(cross)
        if g.has_arc(x, y):
            verts = tuple(P[: i + 1]) + (y,) + tuple(Q[:j][::-1]) + (a4,)
            dirs = (1,) * i + (1,) + (-1,) * j + (1,)
        else:
            verts = tuple(P[: i + 1]) + tuple(Q[: j + 1][::-1]) + (a4,)
            dirs = (1,) * i + (-1,) + (-1,) * j + (1,)
        return PathWitness(verts, dirs)

    back = _backward_arcs(g, Q)
    if back:
        j3, j4 = min(back, key=lambda a: (-a[0], a[1], Q[a[1]]))
        tail = tuple(Q[j3:][::-1][1:])
        return PathWitness(tuple(P) + tail + (Q[j4],), (1,) * (len(P) - 1) + (-1,) * len(tail) + (1,))

    tail = tuple(Q[::-1][1:])
    return PathWitness(tuple(P) + tail + (a4,), (1,) * (len(P) - 1) + (-1,) * len(tail) + (1,))


def detect_A4_minus(g: Digraph, within: Iterable[int] | None = None) -> PathWitness | None:
    _require_oriented(g)
    alive = _alive(g, within)
    for t2, t1 in g.sorted_arcs():
        if t1 not in alive or t2 not in alive:
            continue
        rest = alive - {t1} - (set(g.neighbors(t1)) - {t2})
        w = detect_A3plus_rooted(g, t2, rest, check=False)
        if w is not None:
            return w.prepend(t1, -1)
    return None


def detect_four_block_corollary(g: Digraph, shape: OrientedPathShape, within: Iterable[int] | None = None) -> PathWitness | None:
    """Induced subdivision of a four-block path with blocks (l1, l2, 1, 1)."""
    if len(shape.blocks) != 4 or shape.blocks[2:] != (1, 1):
        raise ValueError("shape must have blocks (l1, l2, 1, 1)")
    _require_oriented(g)
    if shape.first is Direction.FORWARD:
        w = detect_four_block_corollary(g.converse(), shape.converse(), within)
        return None if w is None else w.converse()
    return _prefixed_search(g, _prefix_directions(shape), within,
                            lambda h, s, rest: detect_A3plus_rooted(h, s, rest, check=False))


def a3plus_flow_pairs(g: Digraph, s: int, within: Iterable[int] | None = None):
    """Yield every (a2, a3, a4, paths) for which the flow step succeeds (for exhaustiveness checks)."""
    alive = _alive(g, within)
    pred1 = set(g.predecessors(s))
    for a2 in sorted(alive - {s}):
        succ2 = set(g.successors(a2))
        for a3, a4 in g.sorted_arcs():
            if len({s, a2, a3, a4}) < 4 or a3 not in alive or a4 not in alive:
                continue
            removed = (set(g.neighbors(a4)) - {a3}) | pred1 | set(g.predecessors(a3)) | succ2
            if removed.intersection((s, a2, a3, a4)):
                continue
            allowed = alive - removed - {a4}
            found = two_paths_into(g, s, a3, a2, allowed)
            if found is not None:
                yield a2, a3, a4, found, _a3plus_witness(g, found, a4)
