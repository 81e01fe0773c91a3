import pytest

from gq416.geometry import build_quadric_quadrangle
from gq416.graph import PointGraph, local_partition


@pytest.fixture(scope="session")
def q54():
    return build_quadric_quadrangle()


@pytest.fixture(scope="session")
def graph(q54):
    return PointGraph.from_gq(q54)


@pytest.fixture(scope="session")
def canonical(graph):
    p, q = next(graph.non_edges())
    return local_partition(graph, p, q)
