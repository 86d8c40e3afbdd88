import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs, oriented_digraphs
from inducedsub.basic import (
    detect_C2_subdivision,
    detect_C3_oriented,
    detect_Pk,
    detect_spider_forest,
    detect_spiders_plus_cycle,
    iter_induced_copies,
    shortest_cycle,
    spiders_plus_cycle_pattern,
)
from inducedsub.digraph import Digraph, disjoint_union
from inducedsub.families import directed_cycle, directed_path, spider, transitive_tournament
from inducedsub.oracle import oracle_find_subdivision
from inducedsub.witness import verify_witness

SPIDERS = [spider([1]), spider([1, -1]), spider([2, -1]), spider([-1, -1, 1]), disjoint_union(spider([1]), spider([1]))]


@given(digraphs(max_n=7), st.integers(2, 5))
@settings(max_examples=100, deadline=None)
def test_Pk_matches_oracle(g, k):
    w = detect_Pk(g, k)
    assert (w is None) == (oracle_find_subdivision(g, directed_path(k)) is None)
    if w is not None:
        assert verify_witness(g, directed_path(k), w)


@given(digraphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_C2_matches_oracle(g):
    w = detect_C2_subdivision(g)
    assert (w is None) == (oracle_find_subdivision(g, directed_cycle(2)) is None)
    if w is not None:
        assert verify_witness(g, directed_cycle(2), w)


@given(oriented_digraphs(max_n=7))
@settings(max_examples=100, deadline=None)
def test_C3_matches_oracle_on_oriented_graphs(g):
    w = detect_C3_oriented(g)
    assert (w is None) == (oracle_find_subdivision(g, directed_cycle(3)) is None)
    if w is not None:
        assert verify_witness(g, directed_cycle(3), w)


def test_C3_needs_oriented_host():
    with pytest.raises(ValueError):
        detect_C3_oriented(directed_cycle(2))


def test_C3_is_not_a_shortest_cycle_question_on_digraphs():
    # a digraph whose only long cycle has a 2-cycle chord: no induced C3-subdivision
    g = Digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
    assert oracle_find_subdivision(g, directed_cycle(3)) is None
    assert shortest_cycle(g) == [0, 1]


@given(digraphs(max_n=7), st.sampled_from(SPIDERS))
@settings(max_examples=100, deadline=None)
def test_spider_forest_matches_oracle(g, s):
    w = detect_spider_forest(g, s)
    assert (w is None) == (oracle_find_subdivision(g, s) is None)
    if w is not None:
        assert verify_witness(g, s, w)


def test_spider_forest_rejects_other_patterns():
    with pytest.raises(ValueError):
        detect_spider_forest(directed_path(3), directed_cycle(3))


@given(digraphs(max_n=8), st.sampled_from(SPIDERS[:3]))
@settings(max_examples=80, deadline=None)
def test_spiders_plus_two_cycle(g, s):
    d = spiders_plus_cycle_pattern(s, 2)
    w = detect_spiders_plus_cycle(g, s, 2)
    assert (w is None) == (oracle_find_subdivision(g, d) is None)
    if w is not None:
        assert verify_witness(g, d, w)


@given(oriented_digraphs(max_n=8), st.sampled_from(SPIDERS[:3]))
@settings(max_examples=80, deadline=None)
def test_spiders_plus_three_cycle(g, s):
    d = spiders_plus_cycle_pattern(s, 3)
    w = detect_spiders_plus_cycle(g, s, 3)
    assert (w is None) == (oracle_find_subdivision(g, d) is None)
    if w is not None:
        assert verify_witness(g, d, w)


def test_induced_copies_respect_non_adjacency():
    g = transitive_tournament(4)
    assert next(iter_induced_copies(g, spider([1, 1])), None) is None
    assert len(list(iter_induced_copies(directed_cycle(3), directed_path(2)))) == 3
