"""
Path-based flows: congestion, dilation and routed demand, in exact arithmetic.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from cuts.demand import Demand
from cuts.paths import Path, path_edge_ids, path_length
from graph.core import Graph
from utils.errors import InputError


@dataclass
class Flow:
    paths: list[tuple[Path, Fraction]] = field(default_factory=list)

    def add(self, path: Path, value) -> None:
        value = Fraction(value)
        if value <= 0:
            raise InputError(f"flow value must be positive, got {value}")
        if len(path) < 2 or len(set(path)) != len(path):
            raise InputError(f"flow path {path} is not a simple path")
        self.paths.append((tuple(path), value))

    def validate(self, g: Graph) -> None:
        for path, _ in self.paths:
            for a, b in zip(path, path[1:]):
                if not g.has_edge(a, b):
                    raise InputError(f"flow path {path} uses non-edge {a}-{b}")

    def edge_loads(self, g: Graph) -> dict[int, Fraction]:
        loads: dict[int, Fraction] = {}
        for path, value in self.paths:
            for eid in path_edge_ids(g, path):
                loads[eid] = loads.get(eid, Fraction(0)) + value
        return loads

    def congestion(self, g: Graph) -> Fraction:
        return max(self.edge_loads(g).values(), default=Fraction(0))

    def dilation(self, g: Graph):
        return max((path_length(g, path) for path, _ in self.paths), default=0)

    def routed_demand(self) -> Demand:
        values: dict[tuple[int, int], Fraction] = {}
        for path, value in self.paths:
            key = (path[0], path[-1])
            values[key] = values.get(key, Fraction(0)) + value
        return Demand(values)

    def __len__(self) -> int:
        return len(self.paths)
