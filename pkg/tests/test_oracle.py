import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs
from inducedsub.digraph import Digraph, disjoint_union, induced_arcs, subdivide
from inducedsub.families import cone, directed_cycle, directed_path, lollipop, spider, st4, transitive_tournament
from inducedsub.oracle import (
    DidppInstance,
    OracleBoundError,
    iter_induced_paths,
    iter_subdivisions,
    oracle_find_subdivision,
    search_subdivision,
    search_subdivisions,
    solve_didpp,
    solve_induced_ab_path,
)
from inducedsub.witness import Witness, verify_witness, witness_problems

PATTERNS = [
    directed_path(3),
    directed_cycle(2),
    directed_cycle(3),
    transitive_tournament(3),
    st4(),
    lollipop(),
    cone(),
    spider([1, -1]),
    disjoint_union(directed_cycle(2), directed_path(2)),
]


def _brute_force(g: Digraph, d: Digraph) -> bool:
    """Slowest possible reference: try every vertex subset and every injective node map."""
    for size in range(d.n, g.n + 1):
        for members in itertools.combinations(range(g.n), size):
            arcs = induced_arcs(g, members)
            for images in itertools.permutations(members, d.n):
                if _routes(g, d, set(members), arcs, images):
                    return True
    return False


def _routes(g, d, members, arcs, images):
    # every member is a branch vertex or an internal vertex of exactly one branch,
    # and the induced arcs are exactly the branch arcs
    phi = dict(enumerate(images))
    inner = members - set(images)
    used = set()

    def extend(todo):
        if not todo:
            return not inner - used and arcs == arcs_used[0]
        (a, b), rest = todo[0], todo[1:]
        src, dst = phi[a], phi[b]
        stack = [(src, [src])]
        while stack:
            v, path = stack.pop()
            for w in g.successors(v):
                if w == dst:
                    new = set(zip(path, path[1:] + [dst]))
                    if new & arcs_used[0]:
                        continue
                    arcs_used[0] |= new
                    used.update(path[1:])
                    if extend(rest):
                        return True
                    arcs_used[0] -= new
                    used.difference_update(path[1:])
                elif w in inner and w not in used and w not in path:
                    stack.append((w, path + [w]))
        return False

    arcs_used = [set()]
    return extend(sorted(d.arcs))


@given(digraphs(max_n=5), st.sampled_from(PATTERNS[:5]))
@settings(max_examples=80, deadline=None)
def test_subset_oracle_matches_brute_force(g, d):
    assert (oracle_find_subdivision(g, d) is not None) == _brute_force(g, d)


@given(digraphs(max_n=8), st.sampled_from(PATTERNS))
@settings(max_examples=150, deadline=None)
def test_two_oracles_agree(g, d):
    w1 = oracle_find_subdivision(g, d)
    w2 = search_subdivision(g, d)
    assert (w1 is None) == (w2 is None)
    for w in (w1, w2):
        if w is not None:
            assert witness_problems(g, d, w) == []


@given(digraphs(max_n=7), st.sampled_from(PATTERNS[:4]))
@settings(max_examples=60, deadline=None)
def test_every_listed_subset_is_distinct_and_valid(g, d):
    seen = set()
    for w in iter_subdivisions(g, d):
        assert verify_witness(g, d, w)
        assert w.vertices not in seen
        seen.add(w.vertices)
    assert {w.vertices for w in search_subdivisions(g, d)} == seen


def test_pattern_found_in_its_own_subdivision():
    for d in PATTERNS:
        big = subdivide(d, {a: 1 + i % 3 for i, a in enumerate(d.sorted_arcs())})
        w = oracle_find_subdivision(big, d)
        assert w is not None and verify_witness(big, d, w)
        # the whole graph is one of the listed subsets
        assert frozenset(range(big.n)) in {x.vertices for x in iter_subdivisions(big, d)}


def test_fixed_pins_a_vertex():
    g = directed_path(4)
    assert oracle_find_subdivision(g, directed_path(2), fixed={0: 3}) is None
    w = oracle_find_subdivision(g, directed_path(2), fixed={0: 1})
    assert w.node_map[0] == 1
    assert search_subdivision(g, directed_path(3), fixed={0: 2}) is None


def test_bound_and_orientation_checks():
    with pytest.raises(OracleBoundError):
        oracle_find_subdivision(directed_path(20), directed_path(2))
    assert oracle_find_subdivision(directed_path(20), directed_path(2), max_n=20) is not None
    with pytest.raises(ValueError):
        oracle_find_subdivision(directed_cycle(2), directed_path(2), require_oriented_g=True)


def test_routing_oracle_has_no_size_bound():
    g = subdivide(st4(), {a: 10 for a in st4().arcs})
    assert g.n > 40
    w = search_subdivision(g, st4())
    assert verify_witness(g, st4(), w)


def test_witness_checker_reports_problems():
    g = transitive_tournament(3)
    d = directed_path(3)
    w = Witness({0: 0, 1: 1, 2: 2}, {(0, 1): (0, 1), (1, 2): (1, 2)})
    assert any("extra arcs" in p for p in witness_problems(g, d, w))
    assert witness_problems(g, d, Witness({0: 0}, {})) == ["node map does not cover the pattern vertices"]
    bad = Witness({0: 0, 1: 2, 2: 1}, {(0, 1): (0, 2), (1, 2): (2, 1)})
    assert "branch (1, 2) uses missing arc (2, 1)" in witness_problems(g, d, bad)


def test_witness_json_round_trip():
    w = Witness({0: 4, 1: 2}, {(0, 1): (4, 3, 2)})
    assert Witness.from_json(w.to_json()) == w


def test_induced_paths():
    g = Digraph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (1, 4)])
    paths = list(iter_induced_paths(g, 0, 4))
    assert [0, 1, 4] in paths
    assert [0, 1, 2, 3, 4] not in paths  # 0 -> 2 is a chord
    assert [0, 2, 3, 4] in paths
    assert solve_induced_ab_path(g, 4, 0) is None
    with pytest.raises(ValueError):
        list(iter_induced_paths(g, 1, 1))


def test_induced_path_never_uses_two_cycle():
    # the reverse arc of a 2-cycle is always a chord
    g = Digraph(3, [(0, 1), (1, 0), (1, 2)])
    assert list(iter_induced_paths(g, 0, 2)) == []
    h = Digraph(3, [(0, 1), (1, 2), (2, 1)])
    assert list(iter_induced_paths(h, 0, 2)) == []


def test_didpp_validation():
    g = Digraph(4, [(0, 1), (2, 3)])
    with pytest.raises(ValueError):
        DidppInstance(g, 0, 1, 0, 3)
    with pytest.raises(ValueError):
        DidppInstance(directed_cycle(4), 0, 1, 2, 3)
    with pytest.raises(ValueError):
        DidppInstance(Digraph(4, [(2, 0)]), 0, 1, 2, 3)


def test_didpp_solver():
    g = Digraph(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    p1, p2 = solve_didpp(DidppInstance(g, 0, 2, 3, 5))
    assert p1 == [0, 1, 2] and p2 == [3, 4, 5]
    # an arc between the two only available paths makes them non-independent
    h = g.with_arcs(add=[(1, 4)])
    assert solve_didpp(DidppInstance(h, 0, 2, 3, 5)) is None
    with pytest.raises(OracleBoundError):
        solve_didpp(DidppInstance(g, 0, 2, 3, 5), max_n=4)
