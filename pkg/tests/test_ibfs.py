import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oriented_digraphs
from inducedsub.digraph import Digraph, disjoint_union
from inducedsub.families import directed_cycle, spider, tiny_cherry, transitive_tournament
from inducedsub.generate import random_oriented
from inducedsub.ibfs import (
    cherry_or_obstruction,
    cherry_rooted,
    detect_spiders_plus_tiny_cherry,
    detect_tiny_cherry,
    detect_TT3_subdivision,
    find_cherry,
    ibfs,
    ibfs_tree_problems,
    obstruction_holds,
    spiders_plus_tiny_cherry_pattern,
)
from inducedsub.oracle import oracle_find_subdivision
from inducedsub.witness import verify_witness


@given(oriented_digraphs(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_tree_is_induced_out_tree(g, rnd):
    rank = list(range(g.n))
    rnd.shuffle(rank)
    for s in range(g.n):
        tree = ibfs(g, s, rank)
        assert ibfs_tree_problems(g, tree) == []
        assert tree.order[0] == s


@given(oriented_digraphs(max_n=8), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_dichotomy(g, rnd):
    rank = list(range(g.n))
    rnd.shuffle(rank)
    for s in range(g.n):
        tree, c = cherry_or_obstruction(g, s, rank)
        assert (c is None) == obstruction_holds(g, tree)
        if c is not None:
            assert c.s == s and c.problems(g) == []


@given(oriented_digraphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_TT3_matches_oracle(g):
    w = detect_TT3_subdivision(g)
    tt3 = transitive_tournament(3)
    assert (w is None) == (oracle_find_subdivision(g, tt3) is None)
    if w is not None:
        assert verify_witness(g, tt3, w)


@given(oriented_digraphs(max_n=8), st.integers(0, 2))
@settings(max_examples=100, deadline=None)
def test_tiny_cherry_matches_oracle(g, p):
    w = detect_tiny_cherry(g, p)
    d = tiny_cherry(p)
    assert (w is None) == (oracle_find_subdivision(g, d) is None)
    if w is not None:
        assert verify_witness(g, d, w)


@given(oriented_digraphs(max_n=9), st.sampled_from([spider([1]), spider([1, -1])]), st.integers(0, 1))
@settings(max_examples=60, deadline=None)
def test_spiders_plus_tiny_cherry(g, s, p):
    d = spiders_plus_tiny_cherry_pattern(s, p)
    w = detect_spiders_plus_tiny_cherry(g, s, p)
    assert (w is None) == (oracle_find_subdivision(g, d) is None)
    if w is not None:
        assert verify_witness(g, d, w)


def test_rejects_two_cycles():
    with pytest.raises(ValueError):
        cherry_rooted(directed_cycle(2), 0)
    with pytest.raises(ValueError):
        find_cherry(directed_cycle(2))


def test_cherry_found_in_subdivided_tt3():
    g = Digraph(5, [(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)])
    c = cherry_rooted(g, 0)
    assert c is not None and c.u == 0 and c.v == 3 and c.is_valid(g)
    assert cherry_rooted(g, 3) is None


def test_rank_changes_nothing_about_existence():
    rng = random.Random(11)
    for _ in range(40):
        g = random_oriented(9, 0.35, rng)
        for s in range(g.n):
            base = cherry_rooted(g, s) is not None
            rank = list(range(g.n))
            rng.shuffle(rank)
            assert (cherry_rooted(g, s, rank) is not None) == base


def test_large_sparse_graph_runs():
    g = random_oriented(300, 0.01, 5)
    tree, c = cherry_or_obstruction(g, 0)
    assert (c is None) == obstruction_holds(g, tree)


def test_within_restricts_search():
    g = disjoint_union(transitive_tournament(3), directed_cycle(3))
    assert detect_TT3_subdivision(g, within=range(3, 6)) is None
    assert detect_TT3_subdivision(g, within=range(3)) is not None
