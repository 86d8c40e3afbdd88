import itertools

from hypothesis import strategies as st

from inducedsub.digraph import Digraph


@st.composite
def digraphs(draw, min_n=1, max_n=7, oriented=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    # 0 none, 1 forward, 2 backward, 3 both
    choices = st.integers(0, 2) if oriented else st.integers(0, 3)
    arcs = []
    for (u, v), c in zip(pairs, draw(st.lists(choices, min_size=len(pairs), max_size=len(pairs)))):
        if c in (1, 3):
            arcs.append((u, v))
        if c in (2, 3):
            arcs.append((v, u))
    return Digraph(n, arcs)


def oriented_digraphs(min_n=1, max_n=7):
    return digraphs(min_n=min_n, max_n=max_n, oriented=True)


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
