import random

import pytest

from folkman.graphs import Graph


@pytest.fixture
def rng():
    return random.Random(0xF01C)


@pytest.fixture(scope="session")
def petersen():
    from folkman.constructions import petersen as build
    return build()


@pytest.fixture(scope="session")
def all_graphs_upto_7():
    """One representative per isomorphism class, n = 1..7, keyed by order."""
    from folkman.genfree import GenFilter, generate_free_graphs
    out: dict[int, list[Graph]] = {}
    for n in range(1, 8):
        out[n] = list(generate_free_graphs(GenFilter(n)))
    return out
