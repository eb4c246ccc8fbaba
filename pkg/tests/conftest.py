import pytest
from hypothesis import settings

from shimura_cert.shimura_graph import analyse_graph, build_graph, label_vertices_by_j

settings.register_profile("repro", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("repro")


@pytest.fixture(scope="session")
def bundle_13_11():
    return analyse_graph(13, 11)


@pytest.fixture(scope="session")
def bundle_137_251():
    """The full (137, 251) pipeline; about half a minute to build."""
    g = build_graph(137, 251)
    label_vertices_by_j(g)
    return analyse_graph(137, 251, graph=g)
