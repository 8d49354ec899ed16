"""
Sweep plan files.

    # comment
    families = er:256:0.05, er:512:0.02, hypercube:8
    t = 3, 5, 7
    strategies = greedy-maximal, lexicographic
    algorithms = seq, par
    seeds = 1, 2, 3
    output = results/sweep.csv
    girth = true
    arboricity_budget = 256
    routing_probes = false
    threads = 4
    svg = results/sweep.svg

Lists are comma separated. Only families and t are required.
"""

from dataclasses import dataclass, field

from analysis.arboricity import ARBORICITY_BUDGET
from gen.families import GeneratorSpec
from spanner.greedy import ALGORITHMS, DEFAULT_SEED, DEFAULT_THREADS, SCRIPTED_STRATEGIES
from utils.errors import GraphFormatError, InputError

KNOWN_KEYS = (
    'families', 't', 'strategies', 'algorithms', 'seeds', 'output',
    'girth', 'arboricity_budget', 'routing_probes', 'threads', 'svg',
)
PARALLEL_STRATEGIES = ('greedy-maximal', 'lexicographic', 'single-edge') + SCRIPTED_STRATEGIES


@dataclass(frozen=True)
class Instance:
    family: str
    t: int
    algorithm: str
    strategy: str
    seed: int

    @property
    def spec(self) -> GeneratorSpec:
        return GeneratorSpec.parse(self.family, self.seed)


@dataclass
class SweepPlan:
    families: list[str]
    t_values: list[int]
    strategies: list[str] = field(default_factory=lambda: ['greedy-maximal'])
    algorithms: list[str] = field(default_factory=lambda: ['par'])
    seeds: list[int] = field(default_factory=lambda: [DEFAULT_SEED])
    output: str = 'sweep.csv'
    girth: bool = True
    arboricity_budget: int = ARBORICITY_BUDGET
    routing_probes: bool = False
    threads: int = DEFAULT_THREADS
    svg: str | None = None

    def validate(self) -> None:
        if not self.families or not self.t_values or not self.seeds or not self.algorithms:
            raise InputError("sweep plan needs at least one family, t value, algorithm and seed")
        for family in self.families:
            GeneratorSpec.parse(family)
        for t in self.t_values:
            if t < 2:
                raise InputError(f"stretch t must be at least 2, got {t}")
        for algorithm in self.algorithms:
            if algorithm not in ALGORITHMS:
                raise InputError(f"Unknown algorithm: {algorithm}. Valid options: {list(ALGORITHMS)}")
        if 'par' in self.algorithms:
            if not self.strategies:
                raise InputError("sweep plan with algorithm 'par' needs a strategy")
            for strategy in self.strategies:
                if strategy not in PARALLEL_STRATEGIES:
                    raise InputError(f"Unknown strategy: {strategy}. Valid options: {list(PARALLEL_STRATEGIES)}")
        if self.threads < 1:
            raise InputError(f"threads must be at least 1, got {self.threads}")

    def instances(self) -> list[Instance]:
        """Cross product in plan order; sequential runs appear once per (family, t, seed)."""
        out = []
        for family in self.families:
            for t in self.t_values:
                for seed in self.seeds:
                    for algorithm in self.algorithms:
                        if algorithm == 'seq':
                            out.append(Instance(family, t, 'seq', 'sequential', seed))
                            continue
                        for strategy in self.strategies:
                            out.append(Instance(family, t, 'par', strategy, seed))
        return out


def _split(value: str) -> list[str]:
    return [item.strip() for item in value.split(',') if item.strip()]


def _flag(value: str, lineno: int) -> bool:
    lowered = value.strip().lower()
    if lowered in ('1', 'true', 'yes', 'on'):
        return True
    if lowered in ('0', 'false', 'no', 'off'):
        return False
    raise GraphFormatError(lineno, f"expected a boolean, got {value!r}")


def parse_plan(text: str) -> SweepPlan:
    raw: dict[str, tuple[int, str]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        key, sep, value = line.partition('=')
        key = key.strip().lower()
        if not sep:
            raise GraphFormatError(lineno, f"expected 'key = value', got {line!r}")
        if key not in KNOWN_KEYS:
            raise GraphFormatError(lineno, f"unknown plan key {key!r}")
        if key in raw:
            raise GraphFormatError(lineno, f"plan key {key!r} given twice")
        raw[key] = (lineno, value.strip())

    for required in ('families', 't'):
        if required not in raw:
            raise GraphFormatError(1, f"plan is missing '{required}'")

    def ints(key: str) -> list[int]:
        lineno, value = raw[key]
        try:
            return [int(x) for x in _split(value)]
        except ValueError:
            raise GraphFormatError(lineno, f"{key} must be a list of integers, got {value!r}")

    plan = SweepPlan(families=_split(raw['families'][1]), t_values=ints('t'))
    if 'strategies' in raw:
        plan.strategies = [s.lower() for s in _split(raw['strategies'][1])]
    if 'algorithms' in raw:
        plan.algorithms = [a.lower() for a in _split(raw['algorithms'][1])]
    if 'seeds' in raw:
        plan.seeds = ints('seeds')
    if 'output' in raw:
        plan.output = raw['output'][1]
    if 'girth' in raw:
        plan.girth = _flag(raw['girth'][1], raw['girth'][0])
    if 'routing_probes' in raw:
        plan.routing_probes = _flag(raw['routing_probes'][1], raw['routing_probes'][0])
    if 'arboricity_budget' in raw:
        plan.arboricity_budget = ints('arboricity_budget')[0]
    if 'threads' in raw:
        plan.threads = ints('threads')[0]
    if 'svg' in raw:
        plan.svg = raw['svg'][1] or None
    plan.validate()
    return plan


def read_plan(path: str) -> SweepPlan:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_plan(f.read())
