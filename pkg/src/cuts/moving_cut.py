"""
Moving cuts on the grid {0, 1/h, ..., 1}.

A cut stores integer numerators k per edge id (value k/h). Applying it adds
h * C(e) = k to the edge's length; a pure cut (every value 0 or 1) can
instead delete its support.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from graph.core import Graph, connected_components, induced_subgraph
from utils.errors import InputError

APPLY_MODES = ('auto', 'lengthen', 'delete')


@dataclass(frozen=True)
class MovingCut:
    h: int
    values: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.h <= 0:
            raise InputError(f"cut resolution h must be positive, got {self.h}")
        cleaned = {}
        for eid, k in self.values.items():
            if not 0 <= k <= self.h:
                raise InputError(f"cut value {k}/{self.h} on edge {eid} is outside [0, 1]")
            if k:
                cleaned[eid] = k
        object.__setattr__(self, 'values', cleaned)

    @classmethod
    def pure(cls, h: int, edge_ids) -> 'MovingCut':
        return cls(h, {eid: h for eid in edge_ids})

    @classmethod
    def from_fractions(cls, h: int, values: dict[int, Fraction]) -> 'MovingCut':
        numerators = {}
        for eid, value in values.items():
            k = Fraction(value) * h
            if k.denominator != 1:
                raise InputError(f"value {value} on edge {eid} is not a multiple of 1/{h}")
            numerators[eid] = int(k)
        return cls(h, numerators)

    def value(self, eid: int) -> Fraction:
        return Fraction(self.values.get(eid, 0), self.h)

    @property
    def size(self) -> Fraction:
        return Fraction(sum(self.values.values()), self.h)

    @property
    def is_pure(self) -> bool:
        return all(k == self.h for k in self.values.values())

    @property
    def support(self) -> list[int]:
        return sorted(self.values)

    def union(self, other: 'MovingCut') -> 'MovingCut':
        """Pointwise maximum; equals the sum when supports are disjoint."""
        if other.h != self.h:
            raise InputError(f"cannot combine cuts with h={self.h} and h={other.h}")
        merged = dict(self.values)
        for eid, k in other.values.items():
            merged[eid] = max(merged.get(eid, 0), k)
        return MovingCut(self.h, merged)

    def check_edges(self, g: Graph) -> None:
        for eid in self.values:
            if not 0 <= eid < g.edge_count:
                raise InputError(f"cut references unknown edge id {eid}")

    def vertex_value(self, g: Graph, v: int) -> Fraction:
        """C(v): total cut value on edges at v."""
        return sum((self.value(eid) for _, eid in g.incident(v)), Fraction(0))


def apply_cut(g: Graph, cut: MovingCut, mode: str = 'auto') -> Graph:
    """
    G - C. 'lengthen' adds h*C(e) to every length; 'delete' drops the support
    of a pure cut; 'auto' deletes for pure cuts and lengthens otherwise.
    """
    if mode not in APPLY_MODES:
        raise InputError(f"Unknown cut mode: {mode}. Valid options: {list(APPLY_MODES)}")
    cut.check_edges(g)
    if mode == 'auto':
        mode = 'delete' if cut.is_pure else 'lengthen'
    if mode == 'delete':
        if not cut.is_pure:
            raise InputError("only pure cuts can delete edges")
        kept = tuple(e for eid, e in enumerate(g.edges) if eid not in cut.values)
        return Graph(g.vertex_count, kept, allows_self_loops=g.allows_self_loops, labels=g.labels)
    return g.with_lengths([length + cut.values.get(eid, 0) for eid, (_, _, length) in enumerate(g.edges)])


def self_loop_degrees(g: Graph, cut: MovingCut, ell) -> list[int]:
    """ceil(C(v) * ell) loops per vertex."""
    ell = Fraction(ell)
    if ell < 0:
        raise InputError(f"linkedness must be non-negative, got {ell}")
    cut.check_edges(g)
    return [math.ceil(cut.vertex_value(g, v) * ell) for v in range(g.vertex_count)]


def with_self_loops(g: Graph, cut: MovingCut, ell) -> Graph:
    """G + L: g with self_loop_degrees(g, cut, ell)[v] unit loops added at each v."""
    loops = self_loop_degrees(g, cut, ell)
    extra = tuple((v, v, 1) for v, count in enumerate(loops) for _ in range(count))
    return Graph(g.vertex_count, g.edges + extra, allows_self_loops=True, labels=g.labels)


def routable_core(g: Graph, cut: MovingCut) -> Graph:
    """Lowest-id component of G - C that has an edge, as an induced subgraph of g - C."""
    if not cut.is_pure:
        raise InputError("routable core needs a pure cut")
    remaining = apply_cut(g, cut, 'delete')
    for component in connected_components(remaining):
        if len(component) >= 2:
            return induced_subgraph(remaining, component)
    raise InputError("every edge is cut, no component with an edge remains")
