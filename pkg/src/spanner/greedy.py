"""
Sequential and parallel greedy t-spanner construction.

Both algorithms grow a partial spanner H from the empty graph. An edge is
t-unspanned when d_H(u, v) > t. The sequential loop adds single unspanned
edges in scan order; the parallel loop adds a whole matching of edges that
are each unspanned against H as it stood at the start of the round. Every
run records its rounds as a PgSequence certificate.
"""

import logging
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from dotenv import load_dotenv

from graph.core import Graph, distance_within, hop_ball
from spanner.strategies import GreedyMaximal, MatchingStrategy, Pair, Scripted, get_strategy
from utils.debug import debug_log, is_debug
from utils.errors import ContractViolation, InputError, ScriptViolation
from utils.rng import shuffled

load_dotenv()

log = logging.getLogger(__name__)

DEFAULT_SEED = int(os.getenv('SPANNER_SEED', '0'))
DEFAULT_THREADS = int(os.getenv('SPANNER_THREADS', '1'))

EDGE_ORDERS = ('input', 'shuffle')


@dataclass
class GreedyConfig:
    t: int
    seed: int = DEFAULT_SEED
    strategy: MatchingStrategy = field(default_factory=GreedyMaximal)
    edge_order: str = 'input'
    shuffle_seed: int | None = None
    threads: int = DEFAULT_THREADS

    def __post_init__(self):
        if self.t < 2:
            raise InputError(f"stretch t must be at least 2, got {self.t}")
        if self.edge_order not in EDGE_ORDERS:
            raise InputError(f"Unknown edge order: {self.edge_order}. Valid options: {list(EDGE_ORDERS)}")

    def ordered_edges(self, g: Graph) -> list[Pair]:
        pairs = g.edge_pairs()
        if self.edge_order == 'shuffle':
            seed = self.seed if self.shuffle_seed is None else self.shuffle_seed
            return shuffled(pairs, seed, stream=0)
        return pairs


@dataclass(frozen=True)
class PgSequence:
    vertex_count: int
    rounds: tuple[tuple[Pair, ...], ...]

    @classmethod
    def from_rounds(cls, vertex_count: int, rounds) -> 'PgSequence':
        return cls(vertex_count, tuple(tuple((min(u, v), max(u, v)) for u, v in r) for r in rounds))

    def edges(self) -> list[Pair]:
        return [e for r in self.rounds for e in r]

    def __len__(self) -> int:
        return len(self.rounds)


@dataclass(frozen=True)
class RoundStat:
    round_index: int
    matching_size: int
    cumulative_edges: int
    millis: float


@dataclass
class SpannerResult:
    spanner: Graph
    certificate: PgSequence
    stats: list[RoundStat]

    @property
    def rounds(self) -> int:
        return len(self.certificate)


@dataclass
class BucketedSpannerResult:
    spanner: Graph
    buckets: list[tuple[int, SpannerResult]]


class PartialSpanner:
    """Growing edge set H on a fixed vertex set, with the bounded unspanned test."""

    def __init__(self, vertex_count: int):
        self.vertex_count = vertex_count
        self.adjacency = [set() for _ in range(vertex_count)]
        self.edges: list[Pair] = []

    def add(self, u: int, v: int) -> None:
        self.adjacency[u].add(v)
        self.adjacency[v].add(u)
        self.edges.append((min(u, v), max(u, v)))

    def contains(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def is_unspanned(self, u: int, v: int, t: int) -> bool:
        # search from the endpoint with fewer H-neighbours
        if len(self.adjacency[u]) > len(self.adjacency[v]):
            u, v = v, u
        return v not in hop_ball(self.adjacency, u, t, target=v)

    def filter_unspanned(self, candidates: list[Pair], t: int, threads: int = 1) -> list[Pair]:
        """Keep candidates unspanned against the current H; H must not change while this runs."""
        if threads <= 1 or len(candidates) < 2 * threads:
            return [e for e in candidates if self.is_unspanned(e[0], e[1], t)]
        size = -(-len(candidates) // threads)
        chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = pool.map(lambda chunk: [e for e in chunk if self.is_unspanned(e[0], e[1], t)], chunks)
            return [e for part in parts for e in part]


def _require_unit(g: Graph, algorithm: str) -> None:
    if not g.is_unit:
        raise InputError(f"{algorithm} needs a unit-length graph; use weighted_greedy_bucketed for lengths")
    if g.allows_self_loops and any(u == v for u, v, _ in g.edges):
        raise InputError(f"{algorithm} needs a simple graph without self-loops")


def unspanned_edges(g: Graph, h: Graph, t: int) -> list[Pair]:
    """{u,v} in E(g) with d_h(u, v) > t, in g's edge order."""
    if g.vertex_count != h.vertex_count:
        raise InputError(f"vertex sets differ: g has {g.vertex_count} vertices, h has {h.vertex_count}")
    return [(u, v) for u, v in g.edge_pairs() if distance_within(h, u, v, t) > t]


def sequential_greedy(g: Graph, cfg: GreedyConfig) -> SpannerResult:
    _require_unit(g, 'sequential greedy')
    h = PartialSpanner(g.vertex_count)
    rounds, stats = [], []
    last = time.perf_counter()
    for u, v in cfg.ordered_edges(g):
        if h.is_unspanned(u, v, cfg.t):
            h.add(u, v)
            now = time.perf_counter()
            rounds.append(((min(u, v), max(u, v)),))
            stats.append(RoundStat(len(rounds), 1, len(h.edges), (now - last) * 1000.0))
            last = now
    log.info("sequential greedy t=%d: kept %d of %d edges", cfg.t, len(h.edges), g.edge_count)
    return SpannerResult(
        spanner=g.spanning_subgraph(h.edges),
        certificate=PgSequence(g.vertex_count, tuple(rounds)),
        stats=stats,
    )


def _check_matching(matching: list[Pair], allowed: set[Pair], round_index: int) -> None:
    if not matching:
        raise ContractViolation(f"round {round_index}: strategy returned an empty matching for a non-empty unspanned set")
    used = set()
    for u, v in matching:
        if (min(u, v), max(u, v)) not in allowed:
            raise ContractViolation(f"round {round_index}: strategy returned edge {u}-{v} outside the unspanned set")
        if u in used or v in used:
            raise ContractViolation(f"round {round_index}: strategy returned a non-matching (edge {u}-{v})")
        used.update((u, v))


def parallel_greedy(g: Graph, cfg: GreedyConfig) -> SpannerResult:
    """
    Repeatedly add a matching of t-unspanned edges until none remain.

    All unspanned tests in a round run against the round-start H. Edges found
    spanned leave the candidate pool for good (H only grows).
    """
    _require_unit(g, 'parallel greedy')
    if isinstance(cfg.strategy, Scripted):
        raise InputError("parallel_greedy does not take scripted rounds; use scripted_parallel_greedy")
    h = PartialSpanner(g.vertex_count)
    pool = cfg.ordered_edges(g)
    rounds, stats = [], []
    round_index = 0
    while True:
        started = time.perf_counter()
        unspanned = h.filter_unspanned(pool, cfg.t, cfg.threads)
        if not unspanned:
            break
        round_index += 1
        matching = [(min(u, v), max(u, v)) for u, v in cfg.strategy.select(unspanned, round_index, cfg.seed)]
        _check_matching(matching, set(unspanned), round_index)
        for u, v in matching:
            h.add(u, v)
        chosen = set(matching)
        pool = [e for e in unspanned if e not in chosen]
        rounds.append(tuple(matching))
        stats.append(RoundStat(round_index, len(matching), len(h.edges), (time.perf_counter() - started) * 1000.0))
        if is_debug():
            debug_log(
                f"ROUND {round_index}",
                f"unspanned={len(unspanned)} matching={len(matching)} total={len(h.edges)}\n"
                + " ".join(f"{u}-{v}" for u, v in matching),
            )
    log.info(
        "parallel greedy t=%d strategy=%s: %d rounds, kept %d of %d edges",
        cfg.t, cfg.strategy.name, len(rounds), len(h.edges), g.edge_count,
    )
    return SpannerResult(
        spanner=g.spanning_subgraph(h.edges),
        certificate=PgSequence(g.vertex_count, tuple(rounds)),
        stats=stats,
    )


def scripted_parallel_greedy(g: Graph, t: int, rounds: list[list[Pair]]) -> SpannerResult:
    """Replay caller-chosen matchings, checking each against the round-start H."""
    _require_unit(g, 'scripted parallel greedy')
    if t < 2:
        raise InputError(f"stretch t must be at least 2, got {t}")
    script = Scripted(rounds)
    h = PartialSpanner(g.vertex_count)
    applied, stats = [], []
    for round_index in range(1, len(script.rounds) + 1):
        started = time.perf_counter()
        matching = script.select([], round_index, 0)
        used = set()
        for u, v in matching:
            if not g.has_edge(u, v):
                raise ScriptViolation(round_index, (u, v), "is not an edge of the graph")
            if u in used or v in used:
                raise ScriptViolation(round_index, (u, v), "shares a vertex with another edge of the round")
            if h.contains(u, v):
                raise ScriptViolation(round_index, (u, v), "was already added in an earlier round")
            if not h.is_unspanned(u, v, t):
                d = distance_within(g.spanning_subgraph(h.edges), u, v, t)
                raise ScriptViolation(round_index, (u, v), f"is {t}-spanned at round start (distance {d})")
            used.update((u, v))
        for u, v in matching:
            h.add(u, v)
        applied.append(tuple(matching))
        stats.append(RoundStat(round_index, len(matching), len(h.edges), (time.perf_counter() - started) * 1000.0))
    log.info("scripted parallel greedy t=%d: %d rounds accepted, %d edges", t, len(applied), len(h.edges))
    return SpannerResult(
        spanner=g.spanning_subgraph(h.edges),
        certificate=PgSequence(g.vertex_count, tuple(applied)),
        stats=stats,
    )


def floor_log2(w: Fraction) -> int:
    """Exact k with 2^k <= w < 2^(k+1)."""
    w = Fraction(w)
    k = w.numerator.bit_length() - w.denominator.bit_length()
    if Fraction(2) ** k > w:
        k -= 1
    return k


def weighted_greedy_bucketed(g: Graph, cfg: GreedyConfig) -> BucketedSpannerResult:
    """
    Bucket edges by weight into [2^i, 2^(i+1)) and run parallel greedy on each
    bucket as an unweighted graph. The union is a 2t-spanner of g.
    """
    buckets: dict[int, list[tuple[int, int]]] = {}
    for u, v, w in g.edges:
        if u == v:
            raise InputError(f"self-loop at {u} cannot be bucketed")
        if w <= 0:
            raise InputError(f"edge {u}-{v} has non-positive weight {w}")
        buckets.setdefault(floor_log2(w), []).append((u, v))
    results = []
    kept: list[Pair] = []
    for index in sorted(buckets):
        bucket_graph = Graph(g.vertex_count, tuple((u, v, 1) for u, v in buckets[index]))
        result = parallel_greedy(bucket_graph, cfg)
        results.append((index, result))
        kept.extend(result.spanner.edge_pairs())
    log.info("bucketed greedy: %d buckets, kept %d of %d edges", len(results), len(kept), g.edge_count)
    return BucketedSpannerResult(spanner=g.spanning_subgraph(kept), buckets=results)


def alternating_rounds(g: Graph) -> list[list[Pair]]:
    """
    Two rounds covering an even cycle: every other edge, then the rest.

    On C4 this is the script whose output keeps all four edges (girth 4)
    for every t >= 3.
    """
    n = g.vertex_count
    if n < 4 or n % 2 or g.edge_count != n or any(d != 2 for d in g.degrees()):
        raise InputError("alternating rounds need an even cycle")
    walk = [0]
    previous = None
    while len(walk) < n:
        here = walk[-1]
        nxt = next(w for w in g.neighbors(here) if w != previous)
        if nxt == 0:
            raise InputError("alternating rounds need a single even cycle, graph is disconnected")
        previous = here
        walk.append(nxt)
    if not g.has_edge(walk[-1], 0):
        raise InputError("alternating rounds need a single even cycle")
    cycle = [(walk[i], walk[(i + 1) % n]) for i in range(n)]
    return [
        [(min(u, v), max(u, v)) for u, v in cycle[0::2]],
        [(min(u, v), max(u, v)) for u, v in cycle[1::2]],
    ]


ALGORITHMS = ('seq', 'par')
SCRIPTED_STRATEGIES = ('alternating', 'scripted-fig2', 'dimensions')


def build_spanner(
    g: Graph,
    t: int,
    algorithm: str,
    strategy: str = 'greedy-maximal',
    seed: int = DEFAULT_SEED,
    threads: int = DEFAULT_THREADS,
    named_rounds: dict[str, list[Pair]] | None = None,
) -> SpannerResult:
    """
    Run one construction by name.

    'alternating' (also accepted as 'scripted-fig2') replays alternating_rounds(g);
    'dimensions' replays the named matchings (dim-1, dim-2, ...) in order.
    """
    if algorithm not in ALGORITHMS:
        raise InputError(f"Unknown algorithm: {algorithm}. Valid options: {list(ALGORITHMS)}")
    if algorithm == 'seq':
        return sequential_greedy(g, GreedyConfig(t=t, seed=seed, threads=threads))
    if strategy in ('alternating', 'scripted-fig2'):
        return scripted_parallel_greedy(g, t, alternating_rounds(g))
    if strategy == 'dimensions':
        if not named_rounds:
            raise InputError("strategy 'dimensions' needs a hypercube instance")
        ordered = sorted(named_rounds, key=lambda name: int(name.rsplit('-', 1)[1]))
        return scripted_parallel_greedy(g, t, [named_rounds[name] for name in ordered])
    return parallel_greedy(g, GreedyConfig(t=t, seed=seed, strategy=get_strategy(strategy), threads=threads))
