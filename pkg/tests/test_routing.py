import math
import random
from fractions import Fraction

import networkx as nx
import pytest

from conftest import path_graph, random_graph
from cuts import routing
from cuts.demand import Demand
from cuts.flow import Flow
from cuts.io import format_flow, parse_flow
from cuts.paths import bounded_paths, path_edge_ids, path_length, paths_for_pairs
from cuts.routing import exact_min_congestion, iteration_bound, route_demand, route_matching
from graph.core import Graph
from utils.errors import GraphFormatError, InputError, PathLimitExceeded

OPPOSITE = [(0, 1), (2, 3)]


def test_bounded_paths_in_k4(k4):
    paths = list(bounded_paths(k4, 0, 1, 3))
    assert paths == [(0, 1), (0, 2, 1), (0, 2, 3, 1), (0, 3, 1), (0, 3, 2, 1)]
    assert list(bounded_paths(k4, 0, 1, 1)) == [(0, 1)]
    assert len(list(bounded_paths(k4, 0, 1, 2))) == 3


def test_bounded_paths_respect_lengths():
    g = Graph.from_edges(3, [(0, 1, 3), (1, 2, 1), (0, 2, 1)])
    assert list(bounded_paths(g, 0, 1, 2)) == [(0, 2, 1)]
    assert list(bounded_paths(g, 0, 1, 1)) == []
    assert path_length(g, (0, 2, 1)) == 2
    assert path_edge_ids(g, (0, 2, 1)) == [2, 1]


@pytest.mark.parametrize("seed", range(10))
def test_bounded_paths_match_networkx(seed):
    g = random_graph(8, 0.4, seed)
    for target in range(1, 8):
        expected = {tuple(p) for p in nx.all_simple_paths(g.to_networkx(), 0, target, cutoff=3)}
        assert set(bounded_paths(g, 0, target, 3)) == expected


def test_path_cap_and_endpoints(k4):
    with pytest.raises(PathLimitExceeded) as info:
        list(bounded_paths(k4, 0, 1, 3, cap=2))
    assert info.value.pair == (0, 1)
    with pytest.raises(InputError):
        list(bounded_paths(k4, 2, 2, 3))


def test_paths_for_pairs_keeps_pair_order(k4):
    pairs = [(0, 1), (2, 3), (1, 3)]
    assert paths_for_pairs(k4, pairs, 2, threads=3) == paths_for_pairs(k4, pairs, 2)


def test_flow_measures(c4):
    flow = Flow()
    flow.add((0, 1), Fraction(1, 2))
    flow.add((0, 3, 2, 1), Fraction(1, 2))
    flow.validate(c4)
    assert flow.congestion(c4) == Fraction(1, 2)
    assert flow.dilation(c4) == 3
    assert flow.routed_demand() == Demand({(0, 1): 1})
    assert len(flow) == 2


def test_flow_rejects_bad_paths(c4):
    flow = Flow()
    with pytest.raises(InputError):
        flow.add((0, 1), 0)
    with pytest.raises(InputError):
        flow.add((0, 1, 0), 1)
    with pytest.raises(InputError):
        flow.add((0,), 1)
    flow.add((0, 2), 1)
    with pytest.raises(InputError):
        flow.validate(c4)


def test_flow_file_format(c4):
    flow = Flow()
    flow.add((0, 3, 2, 1), Fraction(1, 3))
    flow.add((2, 3), 2)
    text = format_flow(flow)
    assert text == "f 1/3 : 0 3 2 1\nf 2 : 2 3\n"
    assert parse_flow(text).paths == flow.paths
    with pytest.raises(GraphFormatError):
        parse_flow("f 1 0 1\n")
    with pytest.raises(GraphFormatError):
        parse_flow("f 1 : 0\n")


def test_iteration_bound():
    expected = math.ceil(routing.MWU_ITERATION_CONSTANT * math.log(2) / 0.25)
    assert iteration_bound(1, 0.5) == expected
    assert iteration_bound(2, 0.5) == expected
    assert iteration_bound(100, 0.1) > iteration_bound(100, 0.5)


def test_opposite_matching_on_c4(c4):
    demand = Demand.from_matching(OPPOSITE, 1)
    assert exact_min_congestion(c4, demand, 3) == pytest.approx(1.0)

    tight = route_matching(c4, OPPOSITE, 1, 3, Fraction(1, 2))
    assert not tight.feasible
    assert tight.flow is None
    assert tight.lower_bound > 0.5
    assert not tight.within_margin

    direct = route_matching(c4, OPPOSITE, 1, 1, 1)
    assert direct.feasible
    assert direct.flow.congestion(c4) == 1
    assert direct.iterations == 1
    assert direct.describe().startswith("feasible")


def test_unreachable_pair_is_infeasible():
    g = path_graph(4)
    demand = Demand({(0, 3): 1})
    assert exact_min_congestion(g, demand, 2) == math.inf
    outcome = route_demand(g, demand, 2, 10)
    assert not outcome.feasible
    assert outcome.lower_bound == math.inf


def test_empty_demand_routes_trivially(c4):
    outcome = route_demand(c4, Demand(), 2, 0)
    assert outcome.feasible
    assert len(outcome.flow) == 0
    assert exact_min_congestion(c4, Demand({(1, 1): 3}), 2) == 0.0


def test_route_matching_validates_the_matching(c4):
    with pytest.raises(InputError):
        route_matching(c4, [(0, 2)], 1, 3, 1)
    with pytest.raises(InputError):
        route_matching(c4, [(0, 1), (1, 2)], 1, 3, 1)
    with pytest.raises(InputError):
        route_demand(c4, Demand({(0, 1): 1}), 3, -1)
    with pytest.raises(InputError):
        route_demand(c4, Demand({(0, 1): 1}), 3, 1, epsilon=1.5)


def test_path_cap_reaches_the_router(k4):
    with pytest.raises(PathLimitExceeded):
        route_demand(k4, Demand({(0, 1): 1}), 3, 1, path_cap=2)


@pytest.mark.parametrize("seed", range(12))
def test_router_agrees_with_the_path_lp(seed):
    rng = random.Random(seed)
    g = random_graph(7, 0.5, 300 + seed)
    if g.edge_count < 2:
        return
    pairs = rng.sample(g.edge_pairs(), min(3, g.edge_count))
    demand = Demand({p: Fraction(rng.randint(1, 3)) for p in pairs})
    optimum = exact_min_congestion(g, demand, 3)

    loose = route_demand(g, demand, 3, Fraction(2 * optimum).limit_denominator(1000) + 1, epsilon=0.1)
    assert loose.feasible
    assert loose.lower_bound <= optimum + 1e-9
    assert loose.flow.congestion(g) <= Fraction(2 * optimum).limit_denominator(1000) + 1
    assert loose.flow.dilation(g) <= 3
    assert loose.flow.routed_demand() == demand

    below = route_demand(g, demand, 3, Fraction(0.9 * optimum).limit_denominator(1000), epsilon=0.1)
    assert not below.feasible
    assert below.lower_bound <= optimum + 1e-9
