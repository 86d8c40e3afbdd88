import random

import pytest

from inducedsub.digraph import Digraph, disjoint_union
from inducedsub.families import Direction, OrientedPathShape, directed_cycle, spider, tiny_cherry, transitive_tournament
from inducedsub.formats import write_edge_list
from inducedsub.generate import random_digraph, random_oriented
from inducedsub.oracle import oracle_find_subdivision
from inducedsub.patterns import PatternError, classify_explicit, detect, parse_pattern
from inducedsub.witness import verify_witness


@pytest.mark.parametrize("text,kind,n", [
    ("pk:4", "DirectedPath", 4),
    ("P4", "DirectedPath", 4),
    ("c2", "TwoCycle", 2),
    ("c:3", "ThreeCycle", 3),
    ("c5", "Cycle", 5),
    ("tt:3", "Cherry", 3),
    ("tt3", "Cherry", 3),
    ("tt:4", "Explicit", 4),
    ("st4", "Explicit", 4),
    ("lollipop", "Explicit", 3),
    ("cone", "Explicit", 3),
    ("cherry", "Cherry", 3),
    ("tiny-cherry:2", "TinyCherry", 5),
    ("a-:3", "PathShape", 4),
    ("a+:2", "PathShape", 3),
    ("shape:-2,1,1", "PathShape", 5),
    ("shape:1,3", "PathShape", 5),
])
def test_parse(text, kind, n):
    spec = parse_pattern(text)
    assert spec.kind == kind and spec.digraph.n == n


@pytest.mark.parametrize("text", ["", "pk", "pk:1", "c:x", "shape:", "shape:0,1", "nonsense", "st4:2", "tiny-cherry:-1"])
def test_parse_errors(text):
    with pytest.raises(PatternError):
        parse_pattern(text)


def test_parse_file(tmp_path):
    path = tmp_path / "d.elist"
    write_edge_list(disjoint_union(spider([1, -1]), directed_cycle(2)), path)
    spec = parse_pattern(str(path))
    assert spec.kind == "SpidersPlusC2"
    bad = tmp_path / "bad.elist"
    bad.write_text("2\n0 7\n")
    with pytest.raises(PatternError):
        parse_pattern(str(bad))


def test_classify_explicit():
    assert classify_explicit(spider([2, -1])).kind == "SpiderForest"
    assert classify_explicit(disjoint_union(spider([1]), directed_cycle(3))).kind == "SpidersPlusC3"
    assert classify_explicit(directed_cycle(3)).kind == "SpidersPlusC3"
    assert classify_explicit(disjoint_union(directed_cycle(2), directed_cycle(2))).kind == "Explicit"
    assert classify_explicit(directed_cycle(4)).kind == "Explicit"


def test_shape_is_read_from_either_end():
    # (1,1,2) has no polynomial detector in its own orientation, but its reversal (2,1,1) does
    spec = parse_pattern("shape:+1,1,2")
    rng = random.Random(4)
    hits = 0
    for _ in range(150):
        g = random_oriented(rng.randint(5, 9), 0.35, rng)
        res = detect(g, spec)
        assert "oracle" not in res.method
        assert res.found == (oracle_find_subdivision(g, spec.digraph) is not None)
        if res.found:
            hits += 1
            assert verify_witness(g, spec.digraph, res.witness)
    assert hits > 10


def test_rooted_cherry_patterns():
    g = Digraph(6, [(5, 0), (0, 1), (1, 2), (0, 3), (3, 2)])
    cherry = parse_pattern("cherry")
    at_source = detect(g, cherry, root=0)
    assert at_source.pattern == transitive_tournament(3)
    assert at_source.witness.node_map[0] == 0
    on_stem = detect(g, cherry, root=5)
    assert on_stem.pattern == tiny_cherry(1)
    assert on_stem.witness.node_map[0] == 5
    assert verify_witness(g, on_stem.pattern, on_stem.witness)
    assert not detect(g, cherry, root=2).found


def test_non_oriented_hosts_fall_back_to_oracle():
    g = random_digraph(7, 0.5, 3)
    res = detect(g, parse_pattern("a-:3"))
    assert res.method == "subset-oracle"
    res = detect(g, parse_pattern("a-:3"), max_oracle_n=4)
    assert res.method == "routing-oracle"


def test_rooted_fallback_pins_vertex():
    g = random_oriented(8, 0.4, 2)
    for root in range(g.n):
        res = detect(g, parse_pattern("st4"), root=root)
        if res.found:
            assert res.witness.node_map[0] == root


def test_bad_root():
    with pytest.raises(ValueError):
        detect(Digraph(2), parse_pattern("pk:2"), root=5)


def test_shape_spec_keeps_direction():
    spec = parse_pattern("shape:-2,1")
    assert spec.params["shape"] == OrientedPathShape((2, 1), Direction.BACKWARD)
