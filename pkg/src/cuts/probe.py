"""
Cross-checks between routing, cuts and pg certificates on micro-instances.

pg_contradiction_probe routes the last matching of a certificate with
dilation t and congestion delta'/2. A flow path that avoids every edge of
that matching is a path of length <= t in the prefix graph, so it can only
exist when the certificate is broken.
"""

import itertools
import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from dotenv import load_dotenv

from cuts.demand import Demand, cut_sparsity
from cuts.moving_cut import MovingCut
from cuts.paths import PATH_CAP
from cuts.routing import MWU_EPSILON, RoutingOutcome, route_demand, route_matching
from graph.core import Graph, all_pairs_within
from spanner.greedy import PgSequence
from utils.errors import InputError
from utils.rng import rng_for

load_dotenv()

log = logging.getLogger(__name__)

THETA_DECOMPOSITION = float(os.getenv('SPANNER_THETA_DECOMPOSITION', '1.0'))
THETA_ROUTING = float(os.getenv('SPANNER_THETA_ROUTING', '1.0'))

PURE_CUT_MAX_EDGES = 20
PURE_CUT_MAX_SUPPORT = 6


@dataclass(frozen=True)
class LcParams:
    h: int
    s: int
    phi: float
    ell: float
    delta: float
    delta_prime: float
    kappa: float
    t: int

    @classmethod
    def for_size(
        cls,
        n: int,
        t: int,
        theta_decomposition: float = THETA_DECOMPOSITION,
        theta_routing: float = THETA_ROUTING,
    ) -> 'LcParams':
        """
        phi = 1 / (2t * n^(theta/t) * log n), delta = 4 theta' t log n / phi^2,
        delta' = phi / (2t) * delta, ell = 1 / (100 phi log n), h = 1, s = t.
        Logs are base 2.
        """
        if t < 2:
            raise InputError(f"t must be at least 2, got {t}")
        if n < 2:
            raise InputError(f"n must be at least 2, got {n}")
        log_n = math.log2(n)
        phi = 1.0 / (2 * t * n ** (theta_decomposition / t) * log_n)
        delta = 4 * theta_routing * t * log_n / phi ** 2
        return cls(
            h=1,
            s=t,
            phi=phi,
            ell=1.0 / (100 * phi * log_n),
            delta=delta,
            delta_prime=phi / (2 * t) * delta,
            kappa=t * n ** (theta_decomposition / t) * log_n,
            t=t,
        )


def pg_contradiction_probe(
    h_graph: Graph,
    seq: PgSequence,
    t: int,
    delta_prime,
    epsilon: float = MWU_EPSILON,
    path_cap: int = PATH_CAP,
) -> tuple[int, ...] | None:
    """A flow path for the last matching that uses none of its edges, or None."""
    if not seq.rounds:
        return None
    matching = list(seq.rounds[-1])
    delta_prime = Fraction(delta_prime)
    outcome = route_matching(h_graph, matching, delta_prime, t, delta_prime / 2, epsilon, path_cap)
    if not outcome.feasible:
        return None
    blocked = {(min(u, v), max(u, v)) for u, v in matching}
    for path, _ in outcome.flow.paths:
        steps = {(min(a, b), max(a, b)) for a, b in zip(path, path[1:])}
        if not steps & blocked:
            log.info("probe: flow path %s avoids the last matching", path)
            return path
    return None


def pure_cuts(g: Graph, resolution: int, max_support: int = PURE_CUT_MAX_SUPPORT):
    """Every pure cut with 1..max_support edges, smallest supports first."""
    for size in range(1, min(max_support, g.edge_count) + 1):
        for support in itertools.combinations(range(g.edge_count), size):
            yield MovingCut.pure(resolution, support)


def sparsest_pure_cut(
    g: Graph, h: int, s: int, max_support: int = PURE_CUT_MAX_SUPPORT
) -> tuple[object, MovingCut | None]:
    """Exhaustive minimum (h, s)-length sparsity over pure cuts; (math.inf, None) if no cut separates anything."""
    if g.edge_count > PURE_CUT_MAX_EDGES:
        raise InputError(f"pure cut search is limited to m <= {PURE_CUT_MAX_EDGES}, got {g.edge_count}")
    best, best_cut = math.inf, None
    for cut in pure_cuts(g, h * s, max_support):
        value = cut_sparsity(g, cut, h, s)
        if value < best:
            best, best_cut = value, cut
    return best, best_cut


def is_length_constrained_expander(g: Graph, h: int, s: int, phi, max_support: int = PURE_CUT_MAX_SUPPORT) -> bool:
    """No pure cut of bounded support has (h, s)-length sparsity below phi."""
    best, _ = sparsest_pure_cut(g, h, s, max_support)
    return best >= phi


def sample_unit_demand(g: Graph, h: int, seed: int, stream: int = 0) -> Demand:
    """
    Random h-length unit demand: random weights on canonical pairs within
    distance h, scaled so every vertex sends and receives at most its degree.
    """
    rng = rng_for(seed, stream)
    near = all_pairs_within(g, h)
    pairs = [(u, v) for u in range(g.vertex_count) for v in sorted(near[u]) if u < v]
    if not pairs:
        return Demand()
    raw = Demand({p: Fraction(int(x)) for p, x in zip(pairs, rng.integers(0, 4, size=len(pairs))) if x})
    scale = Fraction(1)
    for v in range(g.vertex_count):
        worst = max(raw.out_load(v), raw.in_load(v))
        if worst > g.degree(v):
            scale = min(scale, Fraction(g.degree(v)) / worst)
    return raw.scaled(scale)


@dataclass
class SpotCheckResult:
    congestion_cap: float
    dilation: int
    outcomes: list[RoutingOutcome]

    @property
    def routed(self) -> int:
        return sum(1 for o in self.outcomes if o.feasible)

    @property
    def all_routed(self) -> bool:
        return self.routed == len(self.outcomes)


def routing_spot_check(
    g: Graph,
    h: int,
    s: int,
    phi: float,
    samples: int,
    seed: int,
    theta_routing: float = THETA_ROUTING,
    epsilon: float = MWU_EPSILON,
) -> SpotCheckResult:
    """Route sampled h-length unit demands with dilation s*h and congestion theta * log n / phi."""
    if phi <= 0:
        raise InputError(f"phi must be positive, got {phi}")
    cap = theta_routing * math.log2(max(g.vertex_count, 2)) / phi
    outcomes = []
    for i in range(samples):
        demand = sample_unit_demand(g, h, seed, stream=i)
        outcomes.append(route_demand(g, demand, s * h, Fraction(cap).limit_denominator(10 ** 6), epsilon))
    return SpotCheckResult(cap, s * h, outcomes)
