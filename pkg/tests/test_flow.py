from hypothesis import given, settings

from conftest import digraphs
from inducedsub.digraph import Digraph
from inducedsub.families import transitive_tournament
from inducedsub.flow import disjoint_paths, two_paths_from, two_paths_into, two_paths_set_to_vertex


def _is_path(g, p):
    return len(set(p)) == len(p) and all(g.has_arc(u, v) for u, v in zip(p, p[1:]))


def test_two_paths_into():
    g = Digraph(5, [(0, 2), (2, 4), (1, 3), (3, 4)])
    p, q = two_paths_into(g, 0, 1, 4)
    assert p == [0, 2, 4] and q == [1, 3, 4]
    # both paths forced through vertex 2
    h = Digraph(4, [(0, 2), (1, 2), (2, 3)])
    assert two_paths_into(h, 0, 1, 3) is None


def test_two_paths_from_is_converse():
    g = Digraph(4, [(0, 1), (0, 2), (1, 3)])
    assert two_paths_from(g, 0, 3, 2) == ([0, 1, 3], [0, 2])


def test_set_to_vertex_avoids_set_inside():
    g = transitive_tournament(4)
    p, q = two_paths_set_to_vertex(g, {0, 1}, 3)
    assert {p[0], q[0]} == {0, 1}
    assert not ({0, 1} & set(p[1:] + q[1:]))


@given(digraphs(min_n=3, max_n=8))
@settings(max_examples=150, deadline=None)
def test_disjoint_paths_are_disjoint(g):
    res = disjoint_paths(g, [0], [g.n - 1], shared=[0, g.n - 1])
    if res is None:
        return
    p, q = res
    assert _is_path(g, p) and _is_path(g, q)
    assert p != q
    assert not set(p[1:-1]) & set(q[1:-1])
