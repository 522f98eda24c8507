import pytest

from twinmis.graph import build_graph
from oracles import path


@pytest.fixture
def k3():
    return build_graph(3, [1, 1, 1], [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def p4():
    return path(4)


@pytest.fixture
def c4():
    return build_graph(4, [1] * 4, [(0, 1), (1, 2), (2, 3), (3, 0)])


@pytest.fixture
def edge():
    return build_graph(2, [1, 1], [(0, 1)])
