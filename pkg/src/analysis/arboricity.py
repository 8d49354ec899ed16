"""
Arboricity via the Nash-Williams formula.

    alpha(g) = max over U with |U| >= 2 of ceil(|E(U)| / (|U| - 1))

The exact value comes from a binary search between the degeneracy bounds,
each step deciding with max-flow whether some U is denser than the
candidate. Graphs above the vertex budget get bounds only.
"""

import logging
import os
from dataclasses import dataclass
from fractions import Fraction

from dotenv import load_dotenv

from analysis.structure import degeneracy, min_degree_subgraph
from graph.core import Graph, induced_subgraph
from graph.maxflow import FlowNetwork
from utils.debug import debug_log
from utils.errors import ContractViolation, InputError

load_dotenv()

log = logging.getLogger(__name__)

ARBORICITY_BUDGET = int(os.getenv('SPANNER_ARBORICITY_BUDGET', '256'))
BRUTEFORCE_SUBSET_MAX_N = 12


@dataclass(frozen=True)
class ArboricityResult:
    lower: int
    upper: int
    exact: int | None
    witness: tuple[int, ...] = ()

    @property
    def value(self) -> int:
        """Exact value when known, the lower bound otherwise."""
        return self.exact if self.exact is not None else self.lower

    def describe(self) -> str:
        if self.exact is not None:
            return str(self.exact)
        return f"{self.lower}..{self.upper}"


def nash_williams_ratio(edges_inside: int, size: int) -> int:
    if size < 2:
        return 0
    return -(-edges_inside // (size - 1))


def _require_simple(g: Graph) -> None:
    if any(u == v for u, v, _ in g.edges):
        raise InputError("arboricity needs a graph without self-loops")


def arboricity_bruteforce(g: Graph) -> int:
    """Maximise the Nash-Williams ratio over every vertex subset; n <= 12 only."""
    n = g.vertex_count
    if n > BRUTEFORCE_SUBSET_MAX_N:
        raise InputError(f"subset enumeration is limited to n <= {BRUTEFORCE_SUBSET_MAX_N}, got {n}")
    _require_simple(g)
    masks = [(1 << u) | (1 << v) for u, v, _ in g.edges]
    best = 0
    for subset in range(1, 1 << n):
        size = subset.bit_count()
        if size < 2:
            continue
        inside = sum(1 for m in masks if m & subset == m)
        best = max(best, nash_williams_ratio(inside, size))
    return best


def densest_core_witness(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Best Nash-Williams ratio over the suffixes of the degeneracy order, with its vertex set."""
    _, order = degeneracy(g)
    position = {v: i for i, v in enumerate(order)}
    best, best_start = 0, len(order)
    inside = 0
    for i in range(len(order) - 1, -1, -1):
        v = order[i]
        inside += sum(1 for w in g.neighbors(v) if position[w] > i)
        ratio = nash_williams_ratio(inside, len(order) - i)
        if ratio > best:
            best, best_start = ratio, i
    return best, tuple(sorted(order[best_start:]))


def has_denser_subset(g: Graph, alpha: int) -> bool:
    """
    Is there a U with |E(U)| > alpha * (|U| - 1)?

    For each root r the network source->edge (1), edge->endpoints (inf),
    vertex->sink (alpha), source->r (inf) has min cut
    min over U containing r of m - |E(U)| + alpha*|U|, which drops below
    m + alpha exactly when a violating U contains r. A root that fails is
    deleted before the next one is tried.
    """
    alive = set(v for v in range(g.vertex_count) if g.degree(v) > 0)
    for root in sorted(alive):
        edges = [(u, v) for u, v, _ in g.edges if u in alive and v in alive]
        if not edges:
            return False
        net = FlowNetwork()
        for u, v in edges:
            net.add_arc(FlowNetwork.SOURCE, ('e', u, v), 1)
            net.add_arc(('e', u, v), ('v', u))
            net.add_arc(('e', u, v), ('v', v))
        for v in alive:
            net.add_arc(('v', v), FlowNetwork.SINK, alpha)
        net.add_arc(FlowNetwork.SOURCE, ('v', root))
        if net.max_flow() < len(edges) + alpha:
            return True
        alive.discard(root)
    return False


def arboricity_exact(g: Graph, budget: int = ARBORICITY_BUDGET) -> ArboricityResult:
    _require_simple(g)
    if g.edge_count == 0:
        return ArboricityResult(0, 0, 0)
    k, _ = degeneracy(g)
    witness_value, witness = densest_core_witness(g)
    lower = max(-(-(k + 1) // 2), witness_value)
    upper = k
    if g.vertex_count > budget:
        log.info("arboricity: n=%d above budget %d, reporting bounds %d..%d", g.vertex_count, budget, lower, upper)
        return ArboricityResult(lower, upper, None, witness)
    lo, hi = lower, upper
    while lo < hi:
        mid = (lo + hi) // 2
        if has_denser_subset(g, mid):
            lo = mid + 1
        else:
            hi = mid
        debug_log("ARBORICITY", f"candidate {mid}: search window now {lo}..{hi}")
    return ArboricityResult(lower, upper, lo, witness)


def high_min_degree_from_arboricity(g: Graph, budget: int = ARBORICITY_BUDGET) -> Graph:
    """Induced subgraph with minimum degree >= alpha/2; never empty when alpha is exact."""
    if g.edge_count == 0:
        raise InputError("graph has no edges")
    result = arboricity_exact(g, budget)
    core = min_degree_subgraph(g, Fraction(result.value, 2))
    if not core and result.exact is not None:
        raise ContractViolation(f"no induced subgraph with minimum degree >= {result.exact}/2 despite exact arboricity")
    return induced_subgraph(g, core)


def edge_count_bound_holds(g: Graph, alpha: int) -> bool:
    """m + 1 >= n - 1 + alpha, for connected g."""
    return g.edge_count + 1 >= g.vertex_count - 1 + alpha
