import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

from fracpower.corpus import complete_graph, connected_graphs, cube_graph, cycle_graph, petersen_graph, star_graph
from fracpower.graph import Graph

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_vertices=1, max_vertices=8, connected=False):
    n = draw(st.integers(min_vertices, max_vertices))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        order = draw(st.permutations(range(n)))
        for k in range(1, n):
            parent = order[draw(st.integers(0, k - 1))]
            chosen.append((parent, order[k]))
    return Graph(n, chosen)


@pytest.fixture(scope="session")
def corpus_4_7_delta3():
    return connected_graphs(4, 7, 3)


@pytest.fixture(scope="session")
def corpus_4_6_delta3():
    return connected_graphs(4, 6, 3)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def k4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
