import random

import pytest

from inducedsub.digraph import is_oriented
from inducedsub.formats import emit_edge_list
from inducedsub.generate import iso_classes, random_didpp, random_digraph, random_oriented


def test_iso_class_counts():
    # OEIS A000273 and A001174
    assert [len(iso_classes(n)) for n in range(1, 6)] == [1, 3, 16, 218, 9608]
    assert [len(iso_classes(n, oriented=True)) for n in range(1, 6)] == [1, 2, 7, 42, 582]


def test_iso_classes_oriented_flag():
    assert all(is_oriented(g) for g in iso_classes(4, oriented=True))
    assert not all(is_oriented(g) for g in iso_classes(3))
    with pytest.raises(ValueError):
        iso_classes(6)


def test_generators_are_reproducible():
    for make in (random_digraph, random_oriented):
        assert emit_edge_list(make(30, 0.2, 123)) == emit_edge_list(make(30, 0.2, 123))
        assert emit_edge_list(make(30, 0.2, 123)) != emit_edge_list(make(30, 0.2, 124))


def test_oriented_generator():
    g = random_oriented(40, 0.5, 1)
    assert is_oriented(g)
    assert random_oriented(10, 1.0, 0).m == 45
    assert random_digraph(10, 1.0, 0).m == 90
    assert random_digraph(10, 0.0, 0).m == 0


def test_random_didpp_instances_are_valid():
    rng = random.Random(3)
    for _ in range(30):
        inst = random_didpp(rng.randint(4, 12), 0.3, rng)
        assert inst.g.n >= 4
    with pytest.raises(ValueError):
        random_didpp(3, 0.3, 0)
