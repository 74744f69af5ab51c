import pytest
from hypothesis import strategies as st

from parityfactor.graph import Graph, build_graph, complete_graph, cycle_graph, path_graph

SPEC_GRID = [(1, 1), (1, 3), (1, 5), (2, 2), (2, 4), (3, 3)]


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def cube() -> Graph:
    return build_graph(8, [(u, u ^ (1 << k)) for u in range(8) for k in range(3) if u < u ^ (1 << k)])


def star(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


@pytest.fixture
def K4():
    return complete_graph(4)


@pytest.fixture
def P3():
    return path_graph(3)


@pytest.fixture
def C6():
    return cycle_graph(6)
