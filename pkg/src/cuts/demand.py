"""
Demands, separated demand and cut sparsity.

All quantities are exact Fractions. cut_sparsity maximises separated unit
demand as a bipartite b-matching: every vertex may send and receive up to
its degree, and only pairs that the cut separates can carry demand.
"""

import logging
import math
import os
from dataclasses import dataclass
from fractions import Fraction

from dotenv import load_dotenv

from cuts.moving_cut import MovingCut, apply_cut
from graph.core import BEYOND_CAP, Graph, all_pairs_within, distance_within
from graph.maxflow import FlowNetwork
from utils.errors import InputError

load_dotenv()

log = logging.getLogger(__name__)

EXP_BASE_DENOMINATOR = int(os.getenv('SPANNER_EXP_BASE_DENOMINATOR', str(10 ** 12)))

PAIR_ORIENTATIONS = ('canonical', 'ordered')

Pair = tuple[int, int]


class Demand:
    """Sparse non-negative demand on ordered vertex pairs, with cached loads."""

    def __init__(self, values: dict[Pair, Fraction] | None = None):
        self._values: dict[Pair, Fraction] = {}
        self._out: dict[int, Fraction] = {}
        self._in: dict[int, Fraction] = {}
        for (u, v), value in (values or {}).items():
            value = Fraction(value)
            if value < 0:
                raise InputError(f"demand on ({u}, {v}) is negative: {value}")
            if value:
                self._values[(u, v)] = self._values.get((u, v), Fraction(0)) + value
                self._out[u] = self._out.get(u, Fraction(0)) + value
                self._in[v] = self._in.get(v, Fraction(0)) + value

    @classmethod
    def from_matching(cls, matching, delta) -> 'Demand':
        """delta on each matched pair, lower endpoint as the source."""
        return cls({(min(u, v), max(u, v)): Fraction(delta) for u, v in matching})

    def get(self, u: int, v: int) -> Fraction:
        return self._values.get((u, v), Fraction(0))

    def pairs(self) -> list[Pair]:
        return sorted(self._values)

    def items(self) -> list[tuple[Pair, Fraction]]:
        return [(p, self._values[p]) for p in self.pairs()]

    def out_load(self, v: int) -> Fraction:
        return self._out.get(v, Fraction(0))

    def in_load(self, v: int) -> Fraction:
        return self._in.get(v, Fraction(0))

    @property
    def load(self) -> Fraction:
        vertices = set(self._out) | set(self._in)
        return max((max(self.out_load(v), self.in_load(v)) for v in vertices), default=Fraction(0))

    @property
    def size(self) -> Fraction:
        return sum(self._values.values(), Fraction(0))

    def is_unit(self, g: Graph) -> bool:
        return all(
            self.out_load(v) <= g.degree(v) and self.in_load(v) <= g.degree(v)
            for v in set(self._out) | set(self._in)
        )

    def is_h_length(self, g: Graph, h) -> bool:
        return all(distance_within(g, u, v, h) is not BEYOND_CAP for u, v in self._values)

    def scaled(self, factor) -> 'Demand':
        factor = Fraction(factor)
        return Demand({p: value * factor for p, value in self._values.items()})

    def check_vertices(self, g: Graph) -> None:
        for u, v in self._values:
            g.check_vertex(u)
            g.check_vertex(v)

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other) -> bool:
        return isinstance(other, Demand) and self._values == other._values

    def __repr__(self) -> str:
        return f"Demand({len(self._values)} pairs, size={self.size})"


def separated(g: Graph, cut: MovingCut, demand: Demand, h) -> Fraction:
    """Demand on pairs whose distance in G - C exceeds h."""
    demand.check_vertices(g)
    cut_graph = apply_cut(g, cut)
    return sum(
        (value for (u, v), value in demand.items() if distance_within(cut_graph, u, v, h) is BEYOND_CAP),
        Fraction(0),
    )


def sparsity_wrt_demand(g: Graph, cut: MovingCut, demand: Demand, h) -> Fraction | None:
    """|C| / sep_h(C, D), or None when nothing is separated."""
    sep = separated(g, cut, demand, h)
    if sep == 0:
        return None
    return cut.size / sep


def separated_pairs(g: Graph, cut: MovingCut, h, s, orientation: str = 'canonical') -> list[Pair]:
    """Pairs within distance h in g but beyond h*s in G - C."""
    if orientation not in PAIR_ORIENTATIONS:
        raise InputError(f"Unknown pair orientation: {orientation}. Valid options: {list(PAIR_ORIENTATIONS)}")
    near = all_pairs_within(g, h)
    cut_graph = apply_cut(g, cut)
    pairs = []
    for u in range(g.vertex_count):
        for v in sorted(near[u]):
            if v == u or (orientation == 'canonical' and v < u):
                continue
            if distance_within(cut_graph, u, v, h * s) is BEYOND_CAP:
                pairs.append((u, v))
    return pairs


def max_separated_unit_demand(g: Graph, pairs: list[Pair]) -> tuple[int, Demand]:
    """Largest unit demand supported on pairs: a max-flow from senders to receivers capped by degree."""
    net = FlowNetwork()
    for u, v in pairs:
        net.add_arc(('out', u), ('in', v))
    for u in {u for u, _ in pairs}:
        net.add_arc(FlowNetwork.SOURCE, ('out', u), g.degree(u))
    for v in {v for _, v in pairs}:
        net.add_arc(('in', v), FlowNetwork.SINK, g.degree(v))
    value, flow = net.max_flow_with_arcs()
    demand = Demand({
        (u, v): Fraction(flow[('out', u)][('in', v)])
        for u, v in pairs
        if flow[('out', u)][('in', v)] > 0
    })
    return value, demand


def cut_sparsity(g: Graph, cut: MovingCut, h: int, s: int, orientation: str = 'canonical'):
    """
    (h, s)-length sparsity of an hs-length cut: |C| over the most separated
    h-length unit demand. math.inf when the cut separates no h-length pair.

    orientation 'canonical' lets each unordered pair carry demand in one
    direction (lower id first); 'ordered' allows both directions.
    """
    if cut.h != h * s:
        raise InputError(f"cut has resolution {cut.h}, an (h={h}, s={s}) cut needs {h * s}")
    pairs = separated_pairs(g, cut, h, s, orientation)
    if not pairs:
        return math.inf
    best, _ = max_separated_unit_demand(g, pairs)
    return cut.size / best


@dataclass
class ExponentialDemand:
    edge_demand: dict[tuple[int, int], Fraction]
    vertex_demand: Demand
    scale: Fraction
    base: Fraction

    def row_sums(self) -> dict[int, Fraction]:
        sums: dict[int, Fraction] = {}
        for (e, _), value in self.edge_demand.items():
            sums[e] = sums.get(e, Fraction(0)) + value
        return sums


def edge_distance(g: Graph, near: dict[int, dict[int, int]], e: int, f: int):
    """Shortest path starting with e and ending with f: 0 when e = f, else endpoint gap plus half of each length."""
    if e == f:
        return 0
    a1, a2, la = g.edges[e]
    b1, b2, lb = g.edges[f]
    gaps = [near[a][b] for a in (a1, a2) for b in (b1, b2) if b in near[a]]
    if not gaps:
        return None
    return min(gaps) + Fraction(la + lb, 2)


def exponential_demand(g: Graph, h: int, s: int) -> ExponentialDemand:
    """
    w(e, f) = n^(-d(e, f) / (sh/2)) for d(e, f) <= sh/2, normalised per row.

    The base n^(-1/(sh)) is rounded once to a Fraction; w is then an exact
    power of it. Each edge row is lifted from both endpoints of e, split evenly over
    the endpoints of f, which makes every out-load exactly the degree; when some in-load exceeds its degree
    the whole vertex demand is scaled down by the reported exact factor.
    """
    if g.edge_count == 0:
        raise InputError("exponential demand needs at least one edge")
    if s * h < 2:
        raise InputError(f"exponential demand needs s*h >= 2, got s={s}, h={h}")
    if any(Fraction(length).denominator != 1 for _, _, length in g.edges):
        raise InputError("exponential demand needs integer edge lengths")
    n = g.vertex_count
    radius = Fraction(s * h, 2)
    base = Fraction(n ** (-1.0 / (s * h))).limit_denominator(EXP_BASE_DENOMINATOR)
    near = all_pairs_within(g, radius)

    edge_demand: dict[tuple[int, int], Fraction] = {}
    for e in range(g.edge_count):
        weights = {}
        for f in range(g.edge_count):
            d = edge_distance(g, near, e, f)
            if d is not None and d <= radius:
                # 2d is an integer because lengths are
                weights[f] = base ** int(2 * d)
        total = sum(weights.values(), Fraction(0))
        for f, w in weights.items():
            edge_demand[(e, f)] = w / total

    lifted: dict[Pair, Fraction] = {}
    for (e, f), value in edge_demand.items():
        a1, a2, _ = g.edges[e]
        b1, b2, _ = g.edges[f]
        sources = (a1,) if a1 == a2 else (a1, a2)
        targets = (b1,) if b1 == b2 else (b1, b2)
        share = value / len(targets)
        for x in sources:
            for y in targets:
                lifted[(x, y)] = lifted.get((x, y), Fraction(0)) + share
    vertex_demand = Demand(lifted)

    scale = Fraction(1)
    for v in range(n):
        incoming = vertex_demand.in_load(v)
        if incoming > g.degree(v):
            scale = min(scale, Fraction(g.degree(v)) / incoming)
    if scale != 1:
        log.info("exponential demand: in-loads exceed degrees, scaling by %s", scale)
        vertex_demand = vertex_demand.scaled(scale)
    return ExponentialDemand(edge_demand, vertex_demand, scale, base)
