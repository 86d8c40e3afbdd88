"""Named pattern digraphs and oriented path shapes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .digraph import Digraph


def directed_path(k: int) -> Digraph:
    """Directed path on ``k`` vertices ``0 -> 1 -> ... -> k-1``."""
    if k < 1:
        raise ValueError("a path needs at least one vertex")
    return Digraph(k, ((i, i + 1) for i in range(k - 1)))


def directed_cycle(k: int) -> Digraph:
    if k < 2:
        raise ValueError("a cycle needs at least two vertices")
    return Digraph(k, ((i, (i + 1) % k) for i in range(k)))


def transitive_tournament(k: int) -> Digraph:
    return Digraph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def st4() -> Digraph:
    # cycle alpha gamma beta delta alpha plus chords alpha->beta, gamma->delta
    alpha, beta, gamma, delta = 0, 1, 2, 3
    return Digraph(4, [(alpha, gamma), (gamma, beta), (beta, delta), (delta, alpha), (alpha, beta), (gamma, delta)],
                   {alpha: "alpha", beta: "beta", gamma: "gamma", delta: "delta"})


def lollipop() -> Digraph:
    x, y, z = 0, 1, 2
    return Digraph(3, [(x, y), (y, z), (z, y)], {x: "x", y: "y", z: "z"})


def cone() -> Digraph:
    x, y, z = 0, 1, 2
    return Digraph(3, [(x, y), (y, z), (z, y), (x, z)], {x: "x", y: "y", z: "z"})


def out_star(leaves: int) -> Digraph:
    return Digraph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def in_star(leaves: int) -> Digraph:
    return Digraph(leaves + 1, ((i, 0) for i in range(1, leaves + 1)))


def spider(legs: Sequence[int]) -> Digraph:
    """Spider with head 0 and one leg per entry; positive lengths point away from the head."""
    arcs = []
    n = 1
    for length in legs:
        if length == 0:
            raise ValueError("legs must be nonempty")
        prev = 0
        for _ in range(abs(length)):
            arcs.append((prev, n) if length > 0 else (n, prev))
            prev = n
            n += 1
    return Digraph(n, arcs)


def tiny_cherry(prefix_len: int) -> Digraph:
    """Directed path ``0..p`` followed by a TT3 on ``p, p+1, p+2`` with source ``p``."""
    if prefix_len < 0:
        raise ValueError("prefix length must be nonnegative")
    p = prefix_len
    arcs = [(i, i + 1) for i in range(p)] + [(p, p + 1), (p, p + 2), (p + 1, p + 2)]
    return Digraph(p + 3, arcs)


class Direction(Enum):
    FORWARD = 1
    BACKWARD = -1


@dataclass(frozen=True)
class OrientedPathShape:
    """Orientation of a path given by its block lengths and first direction."""

    blocks: tuple[int, ...]
    first: Direction

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(int(b) for b in self.blocks))
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ValueError("blocks must be a nonempty sequence of positive lengths")

    @classmethod
    def antidirected(cls, k: int, sign: int) -> "OrientedPathShape":
        """A+_k (sign +1) or A-_k (sign -1): k blocks of length one."""
        if k < 1:
            raise ValueError("k must be positive")
        return cls((1,) * k, Direction.FORWARD if sign > 0 else Direction.BACKWARD)

    @classmethod
    def from_directions(cls, directions: Sequence[int]) -> "OrientedPathShape":
        if not directions:
            raise ValueError("empty direction list")
        blocks = [1]
        for prev, cur in zip(directions, directions[1:]):
            if cur == prev:
                blocks[-1] += 1
            else:
                blocks.append(1)
        return cls(tuple(blocks), Direction(directions[0]))

    @property
    def length(self) -> int:
        return sum(self.blocks)

    def directions(self) -> tuple[int, ...]:
        out = []
        sign = self.first.value
        for b in self.blocks:
            out.extend([sign] * b)
            sign = -sign
        return tuple(out)

    def reversed(self) -> "OrientedPathShape":
        last = self.first.value * (-1) ** (len(self.blocks) - 1)
        return OrientedPathShape(self.blocks[::-1], Direction(-last))

    def converse(self) -> "OrientedPathShape":
        return OrientedPathShape(self.blocks, Direction(-self.first.value))

    def digraph(self) -> Digraph:
        """Pattern digraph on vertices ``0..length`` along the path."""
        arcs = [(i, i + 1) if d > 0 else (i + 1, i) for i, d in enumerate(self.directions())]
        return Digraph(self.length + 1, arcs)

    def __str__(self) -> str:
        sign = "+" if self.first is Direction.FORWARD else "-"
        return sign + ",".join(map(str, self.blocks))


def antidirected(k: int, sign: int) -> Digraph:
    return OrientedPathShape.antidirected(k, sign).digraph()
