"""
SpannerReport: one row of measurements per constructed spanner.
"""

import math
from dataclasses import dataclass

from analysis.arboricity import ARBORICITY_BUDGET, arboricity_exact
from analysis.pg import verify_spanner
from analysis.structure import degeneracy, girth
from graph.core import BEYOND_CAP, Graph

REPORT_FIELDS = [
    'n', 'm_input', 't', 'algorithm', 'strategy', 'seed', 'm_spanner', 'rounds',
    'girth', 'degeneracy', 'arboricity', 'max_stretch', 'millis',
]


def degeneracy_shape(n: int, t: int) -> float:
    """t^3 * log^3 n * n^(1/t) with every hidden constant set to 1."""
    return t ** 3 * math.log2(max(n, 2)) ** 3 * n ** (1.0 / t)


@dataclass
class SpannerReport:
    n: int
    m_input: int
    m_spanner: int
    t: int
    max_edge_stretch: object
    girth: object
    degeneracy: int
    arboricity_lower: int
    arboricity_exact: int | None
    rounds: int
    algorithm: str = ''
    strategy: str = ''
    seed: int = 0
    millis: float = 0.0

    @property
    def valid(self) -> bool:
        return self.max_edge_stretch is not BEYOND_CAP and self.max_edge_stretch <= self.t

    def arboricity_text(self) -> str:
        if self.arboricity_exact is not None:
            return str(self.arboricity_exact)
        return f"{self.arboricity_lower}..{self.degeneracy}"

    def stretch_text(self) -> str:
        return f">{self.t}" if self.max_edge_stretch is BEYOND_CAP else str(self.max_edge_stretch)

    def as_row(self) -> dict:
        return {
            'n': self.n,
            'm_input': self.m_input,
            't': self.t,
            'algorithm': self.algorithm,
            'strategy': self.strategy,
            'seed': self.seed,
            'm_spanner': self.m_spanner,
            'rounds': self.rounds,
            'girth': 'inf' if self.girth == math.inf else ('' if self.girth is None else self.girth),
            'degeneracy': self.degeneracy,
            'arboricity': self.arboricity_text(),
            'max_stretch': self.stretch_text(),
            'millis': f"{self.millis:.3f}",
        }


def build_report(
    g: Graph,
    h: Graph,
    t: int,
    rounds: int,
    algorithm: str = '',
    strategy: str = '',
    seed: int = 0,
    millis: float = 0.0,
    with_girth: bool = True,
    arboricity_budget: int = ARBORICITY_BUDGET,
) -> SpannerReport:
    check = verify_spanner(g, h, t)
    k, _ = degeneracy(h)
    arb = arboricity_exact(h, arboricity_budget)
    return SpannerReport(
        n=g.vertex_count,
        m_input=g.edge_count,
        m_spanner=h.edge_count,
        t=t,
        max_edge_stretch=check.max_stretch,
        girth=girth(h) if with_girth else None,
        degeneracy=k,
        arboricity_lower=arb.lower,
        arboricity_exact=arb.exact,
        rounds=rounds,
        algorithm=algorithm,
        strategy=strategy,
        seed=seed,
        millis=millis,
    )
