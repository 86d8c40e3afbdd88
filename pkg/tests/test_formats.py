import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import digraphs
from inducedsub.digraph import Digraph
from inducedsub.formats import (
    FormatError,
    emit_dimacs,
    emit_dot,
    emit_edge_list,
    parse_dimacs,
    parse_edge_list,
    read_edge_list,
    write_edge_list,
)
from inducedsub.sat import CnfFormula


@given(digraphs(min_n=0, max_n=9))
@settings(max_examples=100, deadline=None)
def test_edge_list_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


def test_labels_survive(tmp_path):
    g = Digraph(3, [(0, 1), (2, 1)], {0: "a", 2: "x^1_2"})
    path = tmp_path / "g.elist"
    write_edge_list(g, path)
    back = read_edge_list(path)
    assert back == g and back.label(2) == "x^1_2" and back.label(1) == "1"


def test_comments_and_blank_lines():
    g = parse_edge_list("# a comment\n\n3\n0 1\n# another\n1 2\n")
    assert g.sorted_arcs() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text", ["", "x\n", "2\n0\n", "2\n0 5\n", "2\n0 0\n", "-1\n", "2\n# label 0 a b\n", "2\n0 1 2\n"])
def test_edge_list_errors(text):
    with pytest.raises(FormatError):
        parse_edge_list(text)


@given(st.integers(1, 4).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.tuples(*[st.integers(1, n).map(int) for _ in range(3)],
                                                         *[st.booleans() for _ in range(3)]), max_size=5))))
def test_dimacs_round_trip(data):
    n, raw = data
    clauses = tuple(tuple(v if s else -v for v, s in zip(c[:3], c[3:])) for c in raw)
    f = CnfFormula(n, clauses)
    assert parse_dimacs(emit_dimacs(f)) == f


def test_dimacs_comments():
    f = parse_dimacs("c hello\np cnf 2 1\n1 -2\n 2 0\n")
    assert f.clauses == ((1, -2, 2),)


@pytest.mark.parametrize("text", [
    "1 2 3 0\n",
    "p cnf 2 1\n1 2 0\n",
    "p cnf 2 2\n1 2 1 0\n",
    "p cnf 2 1\n1 2 3 0\n",
    "p cnf 2 1\n1 2 1\n",
    "p dnf 2 1\n",
    "p cnf 2 1\n1 a 2 0\n",
])
def test_dimacs_errors(text):
    with pytest.raises(FormatError):
        parse_dimacs(text)


def test_dot_highlights_witness():
    g = Digraph(3, [(0, 1), (1, 2)], {0: "a"})
    dot = emit_dot(g, highlight=[0, 1])
    assert 'label="a"' in dot and "fillcolor" in dot
    assert "0 -> 1 [penwidth=2];" in dot and "1 -> 2;" in dot
