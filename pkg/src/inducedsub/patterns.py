"""Pattern names, their digraphs, and dispatch to the best available detector."""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Any

from .basic import (
    iter_induced_oriented_paths,
    detect_C2_subdivision,
    detect_C3_oriented,
    detect_Pk,
    detect_spider_forest,
    detect_spiders_plus_cycle,
)
from .digraph import Digraph, disjoint_union, is_oriented, is_spider_forest, weak_components
from .families import (
    Direction,
    OrientedPathShape,
    cone,
    directed_cycle,
    directed_path,
    lollipop,
    st4,
    tiny_cherry,
    transitive_tournament,
)
from .formats import read_edge_list
from .ibfs import CherryWitness, cherry_rooted, detect_TT3_subdivision, detect_tiny_cherry
from .oracle import oracle_find_subdivision, search_subdivision
from .paths import (
    PathWitness,
    detect_A2_rooted,
    detect_A3_minus,
    detect_A3plus_rooted,
    detect_A4_minus,
    detect_four_block_corollary,
    detect_three_block_last1,
)
from .witness import Witness


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternSpec:
    """A named detection target.

    kind is one of DirectedPath, SpiderForest, TwoCycle, ThreeCycle, Cycle,
    SpidersPlusC2, SpidersPlusC3, Cherry, TinyCherry, PathShape, Explicit.
    """

    kind: str
    digraph: Digraph
    name: str
    params: dict[str, Any] = field(default_factory=dict)


def _int_arg(text: str, arg: str, low: int) -> int:
    try:
        k = int(arg)
    except ValueError:
        raise PatternError(f"{text}: expected an integer after ':'") from None
    if k < low:
        raise PatternError(f"{text}: parameter must be at least {low}")
    return k


def _shape_arg(text: str, arg: str) -> OrientedPathShape:
    arg = arg.strip()
    sign = Direction.FORWARD
    if arg and arg[0] in "+-":
        sign = Direction.FORWARD if arg[0] == "+" else Direction.BACKWARD
        arg = arg[1:]
    try:
        blocks = tuple(int(b) for b in arg.split(","))
        return OrientedPathShape(blocks, sign)
    except ValueError:
        raise PatternError(f"{text}: expected a block list such as -2,1,1") from None


def classify_explicit(d: Digraph, name: str = "explicit") -> PatternSpec:
    """Tag an explicit digraph with the most specific kind it satisfies."""
    if d.n and is_spider_forest(d):
        return PatternSpec("SpiderForest", d, name)
    comps = [d.induced(c)[0] for c in weak_components(d)]
    cycles = [i for i, c in enumerate(comps) if c.n in (2, 3) and c == directed_cycle(c.n)]
    if len(cycles) == 1:
        rest = [c for i, c in enumerate(comps) if i != cycles[0]]
        spiders = disjoint_union(*rest)
        if not rest or is_spider_forest(spiders):
            k = comps[cycles[0]].n
            return PatternSpec(f"SpidersPlusC{k}", d, name, {"spiders": spiders})
    return PatternSpec("Explicit", d, name)


_SHORT_NAMES = {"p": "pk", "pk": "pk", "c": "c", "tt": "tt"}


def parse_pattern(text: str) -> PatternSpec:
    """Parse pk:K (or PK), c:K, c2, tt:K, st4, lollipop, cone, cherry, tiny-cherry:P,
    a-:K, a+:K, shape:[+-]L1,L2,... or a path to an edge-list file."""
    raw = text.strip()
    short = re.fullmatch(r"(pk|p|c|tt)(\d+)", raw.lower())
    if short is None:
        head, _, arg = raw.partition(":")
    else:
        head, arg = _SHORT_NAMES[short[1]], short[2]
    key = head.lower()
    if key == "pk":
        k = _int_arg(raw, arg, 2)
        return PatternSpec("DirectedPath", directed_path(k), raw, {"k": k})
    if key == "c2" and not arg:
        return PatternSpec("TwoCycle", directed_cycle(2), raw)
    if key == "c":
        k = _int_arg(raw, arg, 2)
        kind = {2: "TwoCycle", 3: "ThreeCycle"}.get(k, "Cycle")
        return PatternSpec(kind, directed_cycle(k), raw, {"k": k})
    if key == "tt":
        k = _int_arg(raw, arg, 1)
        return PatternSpec("Explicit" if k != 3 else "Cherry", transitive_tournament(k), raw, {"k": k})
    if key == "st4" and not arg:
        return PatternSpec("Explicit", st4(), raw)
    if key == "lollipop" and not arg:
        return PatternSpec("Explicit", lollipop(), raw)
    if key == "cone" and not arg:
        return PatternSpec("Explicit", cone(), raw)
    if key == "cherry" and not arg:
        return PatternSpec("Cherry", transitive_tournament(3), raw)
    if key == "tiny-cherry":
        p = _int_arg(raw, arg, 0)
        return PatternSpec("TinyCherry", tiny_cherry(p), raw, {"prefix": p})
    if key in ("a-", "a+"):
        k = _int_arg(raw, arg, 1)
        shape = OrientedPathShape.antidirected(k, 1 if key == "a+" else -1)
        return PatternSpec("PathShape", shape.digraph(), raw, {"shape": shape})
    if key == "shape":
        shape = _shape_arg(raw, arg)
        return PatternSpec("PathShape", shape.digraph(), raw, {"shape": shape})
    if os.path.exists(raw):
        try:
            d = read_edge_list(raw)
        except ValueError as exc:
            raise PatternError(f"{raw}: {exc}") from exc
        return classify_explicit(d, raw)
    raise PatternError(f"unknown pattern {raw!r}")


@dataclass(frozen=True)
class Detection:
    """Outcome of :func:`detect`; ``pattern`` is the digraph the witness certifies."""

    witness: Witness | None
    pattern: Digraph
    method: str
    extra: dict[str, Any] = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.witness is not None


def _oracle(g: Digraph, d: Digraph, max_oracle_n: int, fixed=None) -> tuple[Witness | None, str]:
    if g.n <= max_oracle_n:
        return oracle_find_subdivision(g, d, max_n=max_oracle_n, fixed=fixed), "subset-oracle"
    return search_subdivision(g, d, fixed=fixed), "routing-oracle"


def _normalise_shape(shape: OrientedPathShape) -> tuple[OrientedPathShape, bool]:
    """Read the path from the other end when that puts the length-1 blocks last."""
    b = shape.blocks
    if b[-1] != 1 and b[0] == 1:
        return shape.reversed(), True
    return shape, False


def _reverse_witness(w: Witness, length: int) -> Witness:
    """Witness for the same path pattern read from the other end."""
    flip = {a: length - a for a in w.node_map}
    return Witness(
        {flip[a]: v for a, v in w.node_map.items()},
        {(flip[a], flip[b]): p for (a, b), p in w.branches.items()},
    )


def _detect_shape(g: Digraph, shape: OrientedPathShape, root: int | None):
    """Polynomial path detectors; None when no detector covers the shape."""
    blocks = shape.blocks
    if root is not None:
        if blocks == (1, 1) and shape.first is Direction.FORWARD:
            return detect_A2_rooted(g, root), "A2-rooted"
        if blocks == (1, 1, 1) and shape.first is Direction.FORWARD:
            return detect_A3plus_rooted(g, root), "A3+-rooted"
        return None
    if len(blocks) == 1:
        path = next(iter_induced_oriented_paths(g, shape.directions()), None)
        return (None if path is None else PathWitness(path, shape.directions())), "induced-path"
    if blocks == (1, 1):
        src = g if shape.first is Direction.FORWARD else g.converse()
        for s in range(g.n):
            pw = detect_A2_rooted(src, s, check=False)
            if pw is not None:
                return (pw if shape.first is Direction.FORWARD else pw.converse()), "A2-rooted"
        return None, "A2-rooted"
    if blocks == (1, 1, 1):
        if shape.first is Direction.BACKWARD:
            return detect_A3_minus(g), "A3-"
        pw = detect_A3_minus(g.converse())
        return (None if pw is None else pw.converse()), "A3- on converse"
    if len(blocks) == 3 and blocks[2] == 1:
        return detect_three_block_last1(g, shape), "three-block"
    if blocks == (1, 1, 1, 1):
        if shape.first is Direction.BACKWARD:
            return detect_A4_minus(g), "A4-"
        pw = detect_A4_minus(g.converse())
        return (None if pw is None else pw.converse()), "A4- on converse"
    if len(blocks) == 4 and blocks[2:] == (1, 1):
        return detect_four_block_corollary(g, shape), "four-block"
    return None


def detect(g: Digraph, spec: PatternSpec, *, root: int | None = None, max_oracle_n: int = 16) -> Detection:
    """Run the polynomial detector for ``spec`` when one applies, else an exact oracle."""
    d = spec.digraph
    oriented = is_oriented(g)
    if root is not None and not 0 <= root < g.n:
        raise ValueError(f"root {root} is not a vertex")
    kind = spec.kind

    if root is None:
        if kind == "DirectedPath":
            return Detection(detect_Pk(g, spec.params["k"]), d, "induced-path")
        if kind == "TwoCycle":
            return Detection(detect_C2_subdivision(g), d, "shortest-cycle")
        if kind == "ThreeCycle" and oriented:
            return Detection(detect_C3_oriented(g), d, "shortest-cycle")
        if kind == "SpiderForest":
            return Detection(detect_spider_forest(g, d), d, "induced-copy")
        if kind == "SpidersPlusC2":
            return Detection(detect_spiders_plus_cycle(g, spec.params["spiders"], 2), _spc(spec, 2), "spiders-plus-cycle")
        if kind == "SpidersPlusC3" and oriented:
            return Detection(detect_spiders_plus_cycle(g, spec.params["spiders"], 3), _spc(spec, 3), "spiders-plus-cycle")
        if kind == "Cherry" and oriented:
            return Detection(detect_TT3_subdivision(g), d, "ibfs-cherry")
        if kind == "TinyCherry" and oriented:
            return Detection(detect_tiny_cherry(g, spec.params["prefix"]), d, "ibfs-tiny-cherry")
    elif kind == "Cherry" and oriented:
        c = cherry_rooted(g, root)
        if c is None:
            return Detection(None, tiny_cherry(1), "ibfs-cherry-rooted")
        if c.u == root:
            return Detection(c.tt3_witness(), transitive_tournament(3), "ibfs-cherry-rooted", {"cherry": c.to_json()})
        return Detection(_rooted_cherry_witness(c), tiny_cherry(1), "ibfs-cherry-rooted", {"cherry": c.to_json()})

    if kind == "PathShape" and oriented:
        shape, flipped = _normalise_shape(spec.params["shape"])
        if root is not None and flipped:
            shape, flipped = spec.params["shape"], False
        res = _detect_shape(g, shape, root)
        if res is not None:
            pw, method = res
            w = None if pw is None else pw.to_witness(shape)
            if w is not None and flipped:
                w = _reverse_witness(w, shape.length)
            return Detection(w, d, method, {} if pw is None else {"path": pw.to_json()})

    fixed = None if root is None else {0: root}
    w, method = _oracle(g, d, max_oracle_n, fixed)
    return Detection(w, d, method)


def _rooted_cherry_witness(c: CherryWitness) -> Witness:
    """tiny_cherry(1) witness: the stem is P, then the cherry at u."""
    tt = c.tt3_witness().shifted(1)
    return Witness({0: c.s, **tt.node_map}, {(0, 1): c.P, **tt.branches})


def _spc(spec: PatternSpec, k: int) -> Digraph:
    # witnesses list the spider part first, then the cycle
    return disjoint_union(spec.params["spiders"], directed_cycle(k))
