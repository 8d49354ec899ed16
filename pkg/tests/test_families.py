import pytest

from gen.families import GeneratorSpec, generate, hypercube_matchings, named_matchings
from graph.edgelist import write_graph
from utils.cache import GraphCache
from utils.errors import InputError


def test_cycle_four():
    g = generate(GeneratorSpec.parse("cycle:4"))
    assert g.vertex_count == 4
    assert sorted(g.edge_pairs()) == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_hypercube_three():
    spec = GeneratorSpec.parse("hypercube:3")
    g = generate(spec)
    assert g.vertex_count == 8 and g.edge_count == 12
    matchings = named_matchings(spec)
    assert sorted(matchings) == ['dim-1', 'dim-2', 'dim-3']
    assert all(len(m) == 4 for m in matchings.values())


@pytest.mark.parametrize("d", [1, 4, 6])
def test_dimension_matchings_partition_the_hypercube(d):
    g = generate(GeneratorSpec.parse(f"hypercube:{d}"))
    matchings = hypercube_matchings(d)
    union = []
    for m in matchings.values():
        touched = [x for e in m for x in e]
        assert sorted(touched) == list(range(1 << d))
        union.extend(m)
    assert sorted(union) == sorted(g.edge_pairs())


def test_empty_random_graph():
    g = generate(GeneratorSpec.parse("er:100:0"))
    assert g.vertex_count == 100 and g.edge_count == 0


def test_random_graph_is_deterministic_under_seed():
    a = generate(GeneratorSpec.parse("er:60:0.1", seed=7))
    b = generate(GeneratorSpec.parse("er:60:0.1", seed=7))
    c = generate(GeneratorSpec.parse("er:60:0.1", seed=8))
    assert a.edges == b.edges
    assert a.edges != c.edges


def test_other_families():
    assert generate(GeneratorSpec.parse("complete:5")).edge_count == 10
    assert generate(GeneratorSpec.parse("grid:3:4")).edge_count == 17
    petersen = generate(GeneratorSpec.parse("petersen"))
    assert petersen.vertex_count == 10 and petersen.edge_count == 15
    assert named_matchings(GeneratorSpec.parse("cycle:6")) == {}


def test_file_family(tmp_path, k4):
    path = tmp_path / "k4.txt"
    write_graph(k4, str(path))
    assert generate(GeneratorSpec.parse(f"file:{path}")).edges == k4.edges


@pytest.mark.parametrize("text", ["er:0:0.5", "er:10:1.5", "er:10", "cycle:2", "hypercube:0", "grid:0:3", "torus:4", "complete:x"])
def test_invalid_specs(text):
    with pytest.raises(InputError):
        GeneratorSpec.parse(text)


def test_label():
    assert GeneratorSpec.parse("grid:3:4").label == "grid:3:4"
    assert GeneratorSpec.parse("petersen").label == "petersen"


def test_graph_cache_reuses_instances():
    cache = GraphCache()
    spec = GeneratorSpec.parse("er:30:0.2", seed=1)
    first = cache.get_or_generate(spec)
    assert spec in cache and len(cache) == 1
    assert cache.get_or_generate(spec) is first
    cache.clear()
    assert cache.get(spec) is None
