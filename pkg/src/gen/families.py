"""
Graph families for experiments.

Specs are written as short strings (``er:512:0.01``, ``hypercube:10``,
``cycle:4``, ``complete:4``, ``grid:3:4``, ``petersen``, ``file:path``) and
built with networkx generators, then normalised to dense ids with sorted
canonical edges.
"""

from dataclasses import dataclass

import networkx as nx

from graph.core import Graph
from graph.edgelist import read_graph
from utils.errors import InputError

FAMILIES = ('er', 'hypercube', 'cycle', 'complete', 'grid', 'petersen', 'file')
ER_MAX_N = 1 << 14


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: tuple = ()
    seed: int = 0

    @classmethod
    def parse(cls, text: str, seed: int = 0) -> 'GeneratorSpec':
        family, _, rest = text.strip().partition(':')
        family = family.lower()
        if family not in FAMILIES:
            raise InputError(f"Unknown generator family: {family}. Valid options: {list(FAMILIES)}")
        if family == 'file':
            if not rest:
                raise InputError("file: spec needs a path")
            return cls(family, (rest,), seed)
        raw = [p for p in rest.split(':') if p] if rest else []
        try:
            if family == 'er':
                params = (int(raw[0]), float(raw[1]))
            elif family == 'grid':
                params = (int(raw[0]), int(raw[1]))
            elif family == 'petersen':
                params = ()
            else:
                params = (int(raw[0]),)
        except (IndexError, ValueError):
            raise InputError(f"Malformed generator spec: {text!r}")
        spec = cls(family, params, seed)
        spec.validate()
        return spec

    def validate(self) -> None:
        if self.family == 'er':
            n, p = self.params
            if n <= 0 or n > ER_MAX_N:
                raise InputError(f"er: n must be in 1..{ER_MAX_N}, got {n}")
            if not 0.0 <= p <= 1.0:
                raise InputError(f"er: p must be in [0, 1], got {p}")
        elif self.family in ('hypercube', 'complete') and self.params[0] <= 0:
            raise InputError(f"{self.family}: parameter must be positive, got {self.params[0]}")
        elif self.family == 'cycle' and self.params[0] < 3:
            raise InputError(f"cycle: n must be at least 3, got {self.params[0]}")
        elif self.family == 'grid' and min(self.params) <= 0:
            raise InputError(f"grid: dimensions must be positive, got {self.params}")

    @property
    def label(self) -> str:
        return ':'.join([self.family, *(str(p) for p in self.params)])


def _hypercube(d: int) -> Graph:
    edges = []
    for x in range(1 << d):
        for bit in range(d):
            y = x ^ (1 << bit)
            if x < y:
                edges.append((x, y, 1))
    edges.sort()
    return Graph(1 << d, tuple(edges))


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic under spec.seed; hypercube vertex x is the d-bit string of x."""
    family = spec.family
    if family == 'er':
        n, p = spec.params
        return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=spec.seed))
    if family == 'hypercube':
        return _hypercube(spec.params[0])
    if family == 'cycle':
        n = spec.params[0]
        return Graph(n, tuple((i, (i + 1) % n, 1) for i in range(n)))
    if family == 'complete':
        return Graph.from_networkx(nx.complete_graph(spec.params[0]))
    if family == 'grid':
        return Graph.from_networkx(nx.grid_2d_graph(*spec.params))
    if family == 'petersen':
        return Graph.from_networkx(nx.petersen_graph())
    if family == 'file':
        return read_graph(spec.params[0])
    raise InputError(f"Unknown generator family: {family}")


def hypercube_matchings(d: int) -> dict[str, list[tuple[int, int]]]:
    """dim-1..dim-d: the perfect matching flipping bit i-1."""
    return {
        f"dim-{bit + 1}": [(x, x | (1 << bit)) for x in range(1 << d) if not x & (1 << bit)]
        for bit in range(d)
    }


def named_matchings(spec: GeneratorSpec) -> dict[str, list[tuple[int, int]]]:
    if spec.family == 'hypercube':
        return hypercube_matchings(spec.params[0])
    return {}
