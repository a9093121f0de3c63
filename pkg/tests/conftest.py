import itertools

import pytest
from hypothesis import strategies as st

from colorhodge.graphs import Graph, GraphSequence

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n=1, max_n=5, min_edges=0):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    if len(pairs) < min_edges:
        n = max_n
        pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.sets(st.sampled_from(pairs), min_size=min_edges) if pairs else st.just(set()))
    return Graph(n, chosen)


@st.composite
def sequences(draw, max_n=5, max_m=3):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    m = draw(st.integers(1, max_m))
    members = [draw(st.sets(st.sampled_from(pairs), min_size=1)) for _ in range(m)]
    return GraphSequence(n, members)


@pytest.fixture
def k3():
    return Graph.complete(3)


@pytest.fixture
def pair():
    return GraphSequence(4, [[(1, 2)], [(3, 4)]])


@pytest.fixture
def single_edge():
    return GraphSequence(2, [[(1, 2)]])
