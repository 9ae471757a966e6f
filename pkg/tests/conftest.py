import pytest

from sqenergy.graphs import enumerate_graphs


@pytest.fixture(scope="session")
def connected_corpus():
    """All connected graphs on 1..7 vertices, one per isomorphism class."""
    return {n: list(enumerate_graphs(n, connected_only=True)) for n in range(1, 8)}
