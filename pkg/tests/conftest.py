import networkx as nx
import pytest

from gen.families import GeneratorSpec, generate
from graph.core import Graph


def cycle(n: int) -> Graph:
    return generate(GeneratorSpec.parse(f"cycle:{n}"))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, p: float, seed: int) -> Graph:
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


@pytest.fixture
def c4() -> Graph:
    return cycle(4)


@pytest.fixture
def k4() -> Graph:
    return generate(GeneratorSpec.parse("complete:4"))


@pytest.fixture
def q3() -> Graph:
    return generate(GeneratorSpec.parse("hypercube:3"))


@pytest.fixture
def petersen() -> Graph:
    return generate(GeneratorSpec.parse("petersen"))
