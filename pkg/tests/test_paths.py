import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import oriented_digraphs
from inducedsub.digraph import Digraph
from inducedsub.families import Direction, OrientedPathShape, antidirected
from inducedsub.generate import iso_classes, random_oriented
from inducedsub.oracle import oracle_find_subdivision, search_subdivision
from inducedsub.paths import (
    PathWitness,
    a3plus_flow_pairs,
    detect_A2_rooted,
    detect_A3_minus,
    detect_A3plus_rooted,
    detect_A4_minus,
    detect_four_block_corollary,
    detect_three_block_last1,
)
from inducedsub.witness import verify_witness

A2 = OrientedPathShape((1, 1), Direction.FORWARD)
A3 = OrientedPathShape((1, 1, 1), Direction.FORWARD)


def _agrees(g, shape, pw, fixed=None):
    d = shape.digraph()
    o = oracle_find_subdivision(g, d, fixed=fixed)
    assert (pw is None) == (o is None)
    if pw is not None:
        assert pw.problems(g) == []
        assert verify_witness(g, d, pw.to_witness(shape))


@given(oriented_digraphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_A2_rooted(g):
    for s in range(g.n):
        pw = detect_A2_rooted(g, s)
        _agrees(g, A2, pw, {0: s})
        if pw is not None:
            assert pw.vertices[0] == s


@given(oriented_digraphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_A3_minus(g):
    _agrees(g, antidirected_shape(3, -1), detect_A3_minus(g))


def antidirected_shape(k, sign):
    return OrientedPathShape.antidirected(k, sign)


@given(oriented_digraphs(max_n=8), st.sampled_from([(1, 1, 1), (2, 1, 1), (1, 2, 1), (2, 2, 1), (3, 1, 1)]),
       st.sampled_from(list(Direction)))
@settings(max_examples=150, deadline=None)
def test_three_block_last1(g, blocks, first):
    shape = OrientedPathShape(blocks, first)
    _agrees(g, shape, detect_three_block_last1(g, shape))


@given(oriented_digraphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_A3plus_rooted(g):
    for s in range(g.n):
        pw = detect_A3plus_rooted(g, s)
        _agrees(g, A3, pw, {0: s})


@given(oriented_digraphs(max_n=8))
@settings(max_examples=100, deadline=None)
def test_A4_minus(g):
    _agrees(g, antidirected_shape(4, -1), detect_A4_minus(g))


@given(oriented_digraphs(max_n=8), st.sampled_from([(1, 1, 1, 1), (2, 1, 1, 1), (1, 2, 1, 1), (2, 2, 1, 1)]),
       st.sampled_from(list(Direction)))
@settings(max_examples=120, deadline=None)
def test_four_block(g, blocks, first):
    shape = OrientedPathShape(blocks, first)
    _agrees(g, shape, detect_four_block_corollary(g, shape))


def test_four_block_on_larger_graphs():
    # n = 8-9 rarely contains a (2,2,1,1) path; these sizes do
    rng = random.Random(21)
    shape = OrientedPathShape((2, 2, 1, 1), Direction.BACKWARD)
    d = shape.digraph()
    positives = 0
    for _ in range(80):
        g = random_oriented(rng.randint(15, 18), 0.12, rng)
        pw = detect_four_block_corollary(g, shape)
        w = search_subdivision(g, d)
        assert (pw is None) == (w is None)
        if pw is not None:
            positives += 1
            assert verify_witness(g, d, pw.to_witness(shape))
    assert positives >= 10


def _repair_ok(g):
    for s in range(g.n):
        for a2, a3, a4, (P, Q), pw in a3plus_flow_pairs(g, s):
            assert pw.vertices[0] == s, (g, s)
            assert pw.problems(g) == [], (g.sorted_arcs(), s, P, Q, pw)
            pw.to_witness(A3)  # raises unless the shape is an A+3 subdivision


def test_A3plus_repair_exhaustive_small():
    for n in range(4, 6):
        for g in iso_classes(n, oriented=True):
            _repair_ok(g)


def test_A3plus_repair_exhaustive_n6():
    # every oriented 6-vertex graph is a 5-vertex class plus one attached vertex
    for g in iso_classes(5, oriented=True):
        for att in itertools.product((0, 1, 2), repeat=5):
            arcs = list(g.arcs)
            arcs += [(v, 5) for v, a in enumerate(att) if a == 1]
            arcs += [(5, v) for v, a in enumerate(att) if a == 2]
            _repair_ok(Digraph(6, arcs))


def test_path_witness_shape_and_blocks():
    pw = PathWitness((5, 6, 7, 8), (1, 1, -1))
    assert pw.shape == OrientedPathShape((2, 1), Direction.FORWARD)
    assert pw.blocks == [(1, (5, 6, 7)), (-1, (7, 8))]
    assert pw.converse().directions == (-1, -1, 1)
    with pytest.raises(ValueError):
        PathWitness((1, 2), (1, 1))
    with pytest.raises(ValueError):
        pw.to_witness(OrientedPathShape((1, 1), Direction.BACKWARD))


def test_antidirected_helpers_agree():
    assert antidirected(3, -1) == OrientedPathShape.antidirected(3, -1).digraph()
    assert antidirected(2, 1).m == 2


def test_detectors_need_oriented_hosts():
    from inducedsub.families import directed_cycle

    with pytest.raises(ValueError):
        detect_A3_minus(directed_cycle(2))
