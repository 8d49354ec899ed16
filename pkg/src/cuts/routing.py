"""
Length-bounded concurrent flow: can a demand be routed over paths of length
at most `dilation` with every edge carrying at most `cap`?

route_demand runs multiplicative weights with the edges as experts. Each
round every commodity best-responds with its cheapest enumerated path under
the current edge weights and the weights grow exponentially with the load.
Two certificates are kept:

    upper bound   congestion of the averaged flow (exact, it is the flow returned)
    lower bound   sum of demand * cheapest path cost under normalised weights

Feasible is only ever declared after the averaged flow has been rechecked in
exact rational arithmetic.
"""

import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from dotenv import load_dotenv
from scipy.optimize import linprog

from cuts.demand import Demand
from cuts.flow import Flow
from cuts.paths import PATH_CAP, path_edge_ids, paths_for_pairs
from graph.core import Graph
from utils.debug import debug_log, is_debug
from utils.errors import ContractViolation, InputError

load_dotenv()

log = logging.getLogger(__name__)

MWU_EPSILON = float(os.getenv('SPANNER_MWU_EPSILON', '0.05'))
MWU_ITERATION_CONSTANT = float(os.getenv('SPANNER_MWU_ITERATION_CONSTANT', '64'))

_FLOAT_SLACK = 1e-12


@dataclass
class RoutingOutcome:
    feasible: bool
    flow: Flow | None
    lower_bound: float
    upper_bound: float
    iterations: int
    converged: bool = True
    cap: float = 0.0

    @property
    def within_margin(self) -> bool:
        """Infeasible only up to epsilon: the lower bound alone does not exceed the cap."""
        return not self.feasible and self.lower_bound <= self.cap

    def describe(self) -> str:
        verdict = 'feasible' if self.feasible else 'infeasible'
        return f"{verdict} (congestion bounds {self.lower_bound:.6g}..{self.upper_bound:.6g}, {self.iterations} iterations)"


@dataclass
class _Commodities:
    pairs: list[tuple[int, int]]
    demands: list[Fraction]
    paths: list[tuple[int, ...]]
    owner: np.ndarray
    offsets: list[int]
    incidence: np.ndarray


def _enumerate(g: Graph, demand: Demand, dilation, path_cap: int) -> _Commodities | None:
    demand.check_vertices(g)
    items = [(p, value) for p, value in demand.items() if p[0] != p[1]]
    pairs = [p for p, _ in items]
    per_pair = paths_for_pairs(g, pairs, dilation, path_cap)
    if any(not paths for paths in per_pair):
        return None
    paths, owner, offsets = [], [], [0]
    for j, options in enumerate(per_pair):
        paths.extend(options)
        owner.extend([j] * len(options))
        offsets.append(len(paths))
    incidence = np.zeros((len(paths), g.edge_count))
    for i, path in enumerate(paths):
        incidence[i, path_edge_ids(g, path)] = 1.0
    return _Commodities(pairs, [v for _, v in items], paths, np.array(owner, dtype=int), offsets, incidence)


def _exact_flow(g: Graph, com: _Commodities, counts: np.ndarray, rounds: int) -> tuple[Flow, Fraction]:
    flow = Flow()
    for i, c in enumerate(counts):
        if c:
            flow.add(com.paths[i], com.demands[com.owner[i]] * int(c) / rounds)
    return flow, flow.congestion(g)


def _recheck(g: Graph, flow: Flow, demand: Demand, dilation, cap: Fraction) -> None:
    flow.validate(g)
    if flow.congestion(g) > cap:
        raise ContractViolation(f"routed flow has congestion {flow.congestion(g)} above cap {cap}")
    if flow.dilation(g) > dilation:
        raise ContractViolation(f"routed flow has dilation {flow.dilation(g)} above {dilation}")
    expected = Demand({p: v for p, v in demand.items() if p[0] != p[1]})
    if flow.routed_demand() != expected:
        raise ContractViolation("routed flow does not match the requested demand")


def iteration_bound(path_count: int, epsilon: float = MWU_EPSILON) -> int:
    return math.ceil(MWU_ITERATION_CONSTANT * math.log(max(path_count, 2)) / epsilon ** 2)


def route_demand(
    g: Graph,
    demand: Demand,
    dilation,
    cap,
    epsilon: float = MWU_EPSILON,
    path_cap: int = PATH_CAP,
) -> RoutingOutcome:
    cap = Fraction(cap)
    if cap < 0:
        raise InputError(f"congestion cap must be non-negative, got {cap}")
    if not 0 < epsilon < 1:
        raise InputError(f"epsilon must be in (0, 1), got {epsilon}")
    com = _enumerate(g, demand, dilation, path_cap)
    if com is None:
        log.info("routing: some pair has no path of length <= %s", dilation)
        return RoutingOutcome(False, None, math.inf, math.inf, 0, cap=float(cap))
    if not com.pairs:
        return RoutingOutcome(True, Flow(), 0.0, 0.0, 0, cap=float(cap))

    d = np.array([float(v) for v in com.demands])
    width = float(sum(d))
    cap_f = float(cap)
    limit = iteration_bound(len(com.paths), epsilon)
    log_w = np.zeros(g.edge_count)
    counts = np.zeros(len(com.paths), dtype=np.int64)
    cumulative = np.zeros(g.edge_count)
    lower = 0.0
    upper = math.inf
    converged = False

    for k in range(1, limit + 1):
        y = np.exp(log_w - log_w.max())
        y /= y.sum()
        cost = com.incidence @ y
        best = np.array([lo + int(np.argmin(cost[lo:hi])) for lo, hi in zip(com.offsets, com.offsets[1:])])
        lower = max(lower, float(d @ cost[best]))
        load = d @ com.incidence[best]
        counts[best] += 1
        cumulative += load
        upper = float(cumulative.max()) / k
        log_w += epsilon * load / width

        if upper <= cap_f * (1 + _FLOAT_SLACK):
            flow, congestion = _exact_flow(g, com, counts, k)
            if congestion <= cap:
                _recheck(g, flow, demand, dilation, cap)
                log.info("routing: feasible after %d iterations, congestion %s", k, congestion)
                return RoutingOutcome(True, flow, lower, float(congestion), k, cap=cap_f)
        if lower > cap_f * (1 + _FLOAT_SLACK):
            converged = True
            break
        if upper <= (1 + epsilon) * lower:
            converged = True
            break
        if is_debug() and k % 1000 == 0:
            debug_log("MWU", f"iteration {k}: bounds {lower:.6g}..{upper:.6g}, cap {cap_f:.6g}")

    if not converged:
        log.warning("routing: iteration limit %d reached with bounds %.6g..%.6g", limit, lower, upper)
    return RoutingOutcome(False, None, lower, upper, k, converged, cap=cap_f)


def route_matching(
    g: Graph,
    matching,
    delta,
    t: int,
    congestion_cap,
    epsilon: float = MWU_EPSILON,
    path_cap: int = PATH_CAP,
) -> RoutingOutcome:
    """Route delta between the endpoints of every matched edge (lower id as source) over paths of length <= t."""
    used = set()
    for u, v in matching:
        if not g.has_edge(u, v):
            raise InputError(f"matching edge {u}-{v} is not an edge of the graph")
        if u in used or v in used:
            raise InputError(f"edge {u}-{v} shares a vertex with another matching edge")
        used.update((u, v))
    return route_demand(g, Demand.from_matching(matching, delta), t, congestion_cap, epsilon, path_cap)


def exact_min_congestion(g: Graph, demand: Demand, dilation, path_cap: int = PATH_CAP) -> float:
    """
    Optimal congestion over paths of length <= dilation, from the path LP

        minimise lambda  s.t.  sum of f_P over a pair's paths = its demand,
                               load on every edge <= lambda,  f >= 0.
    """
    com = _enumerate(g, demand, dilation, path_cap)
    if com is None:
        return math.inf
    if not com.pairs:
        return 0.0
    p, m = len(com.paths), g.edge_count
    c = np.zeros(p + 1)
    c[-1] = 1.0
    a_eq = np.zeros((len(com.pairs), p + 1))
    for j, (lo, hi) in enumerate(zip(com.offsets, com.offsets[1:])):
        a_eq[j, lo:hi] = 1.0
    b_eq = np.array([float(v) for v in com.demands])
    a_ub = np.hstack([com.incidence.T, -np.ones((m, 1))])
    b_ub = np.zeros(m)
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, A_eq=a_eq, b_eq=b_eq, bounds=[(0, None)] * (p + 1), method='highs')
    if not res.success:
        raise ContractViolation(f"path LP failed: {res.message}")
    return float(res.fun)
