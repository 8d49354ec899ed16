"""
Stretch certification and t-pg sequence checks.

A spanner is checked edge by edge: if every edge of g is stretched by at
most t then every pair is, since a shortest g-path splits into edges.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from graph.core import BEYOND_CAP, Graph, distance_within
from spanner.greedy import PartialSpanner, PgSequence
from utils.errors import InputError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class StretchCheck:
    t: int
    max_stretch: object
    worst_edge: tuple[int, int] | None

    @property
    def valid(self) -> bool:
        return self.max_stretch is not BEYOND_CAP and self.max_stretch <= self.t

    def describe(self) -> str:
        stretch = f">{self.t}" if self.max_stretch is BEYOND_CAP else str(self.max_stretch)
        if self.worst_edge is None:
            return f"max stretch {stretch}"
        u, v = self.worst_edge
        return f"max stretch {stretch} at edge {u}-{v}"


def _check_subgraph(g: Graph, h: Graph) -> None:
    if g.vertex_count != h.vertex_count:
        raise InputError(f"vertex sets differ: g has {g.vertex_count} vertices, h has {h.vertex_count}")
    for u, v, length in h.edges:
        if u == v:
            continue
        if not g.has_edge(u, v):
            raise InputError(f"spanner edge {u}-{v} is not an edge of the input graph")
        if g.length(g.edge_id(u, v)) != length:
            raise InputError(f"spanner edge {u}-{v} has length {length}, input has {g.length(g.edge_id(u, v))}")


def verify_spanner(g: Graph, h: Graph, t: int) -> StretchCheck:
    """
    Worst per-edge stretch d_h(u,v) / l(u,v) over the edges of g.

    Each search is truncated at t * l(u,v); an edge not reached within that
    radius makes the result BEYOND_CAP and is reported as the worst edge.
    """
    _check_subgraph(g, h)
    worst, worst_edge = 1, None
    for u, v, length in g.edges:
        if u == v:
            continue
        d = distance_within(h, u, v, t * length)
        if d is BEYOND_CAP:
            log.debug("edge %d-%d not spanned within %s", u, v, t * length)
            return StretchCheck(t, BEYOND_CAP, (u, v))
        stretch = Fraction(d) / Fraction(length)
        if worst_edge is None or stretch > worst:
            worst, worst_edge = stretch, (u, v)
    if isinstance(worst, Fraction) and worst.denominator == 1:
        worst = int(worst)
    return StretchCheck(t, worst, worst_edge)


class PgReason(Enum):
    NOT_MATCHING = 'not-matching'
    PREFIX_DISTANCE_AT_MOST = 'prefix-distance-at-most-t'
    DUPLICATE_EDGE = 'duplicate-edge'


@dataclass(frozen=True)
class PgViolation:
    round_index: int
    edge: tuple[int, int]
    reason: PgReason
    distance: int | None = None

    def __str__(self) -> str:
        u, v = self.edge
        if self.reason is PgReason.PREFIX_DISTANCE_AT_MOST:
            return f"round {self.round_index}: edge {u}-{v} has prefix distance {self.distance}"
        if self.reason is PgReason.NOT_MATCHING:
            return f"round {self.round_index}: edge {u}-{v} shares a vertex with an earlier edge of the round"
        return f"round {self.round_index}: edge {u}-{v} already appeared"


def verify_pg_sequence(n: int, seq: PgSequence, t: int) -> PgViolation | None:
    """None if seq is a valid t-pg sequence on n vertices, else the first violation (round-major, edge-minor)."""
    if t < 1:
        raise InputError(f"t must be positive, got {t}")
    prefix = PartialSpanner(n)
    seen = set()
    for round_index, rnd in enumerate(seq.rounds, 1):
        used = set()
        for u, v in rnd:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"round {round_index}: edge {u}-{v} is not a pair of distinct vertices in 0..{n - 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                return PgViolation(round_index, key, PgReason.DUPLICATE_EDGE)
            if u in used or v in used:
                return PgViolation(round_index, key, PgReason.NOT_MATCHING)
            if not prefix.is_unspanned(u, v, t):
                d = distance_within(Graph.from_edges(n, prefix.edges), u, v, t)
                return PgViolation(round_index, key, PgReason.PREFIX_DISTANCE_AT_MOST, d)
            used.update((u, v))
            seen.add(key)
        for u, v in rnd:
            prefix.add(u, v)
    return None


def restrict_pg_sequence(seq: PgSequence, keep) -> PgSequence:
    """Intersect every round with keep; rounds left empty are dropped."""
    wanted = {(min(u, v), max(u, v)) for u, v in keep}
    rounds = []
    for rnd in seq.rounds:
        kept = tuple(e for e in rnd if e in wanted)
        if kept:
            rounds.append(kept)
    return PgSequence(seq.vertex_count, tuple(rounds))
