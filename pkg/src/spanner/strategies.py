"""
Matching strategies for the parallel greedy loop.

The loop hands a strategy the round's t-unspanned edges (in the run's edge
order) and expects back a non-empty matching drawn from them.
"""

from abc import ABC, abstractmethod

from utils.errors import InputError
from utils.rng import shuffled

Pair = tuple[int, int]


def greedy_matching(candidates: list[Pair]) -> list[Pair]:
    """Scan candidates in the given order, keep an edge when both endpoints are still free."""
    used = set()
    matching = []
    for u, v in candidates:
        if u not in used and v not in used:
            used.add(u)
            used.add(v)
            matching.append((u, v))
    return matching


class MatchingStrategy(ABC):
    """Abstract base class for matching strategies"""

    name = 'abstract'

    @abstractmethod
    def select(self, unspanned: list[Pair], round_index: int, seed: int) -> list[Pair]:
        """Pick a matching from unspanned (non-empty whenever unspanned is). round_index starts at 1."""
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}()"


class GreedyMaximal(MatchingStrategy):
    """Maximal matching over a seeded random scan of the unspanned edges"""

    name = 'greedy-maximal'

    def select(self, unspanned: list[Pair], round_index: int, seed: int) -> list[Pair]:
        return greedy_matching(shuffled(unspanned, seed, stream=round_index))


class LexicographicMaximal(MatchingStrategy):
    """Maximal matching over the unspanned edges sorted by (u, v)"""

    name = 'lexicographic'

    def select(self, unspanned: list[Pair], round_index: int, seed: int) -> list[Pair]:
        return greedy_matching(sorted(unspanned))


class SingleEdge(MatchingStrategy):
    """First unspanned edge in edge order; turns the parallel loop into the sequential one"""

    name = 'single-edge'

    def select(self, unspanned: list[Pair], round_index: int, seed: int) -> list[Pair]:
        return unspanned[:1]


class Scripted(MatchingStrategy):
    """Caller-supplied rounds, replayed in order"""

    name = 'scripted'

    def __init__(self, rounds: list[list[Pair]]):
        self.rounds = [[(min(u, v), max(u, v)) for u, v in r] for r in rounds]

    def select(self, unspanned: list[Pair], round_index: int, seed: int) -> list[Pair]:
        if round_index > len(self.rounds):
            return []
        return list(self.rounds[round_index - 1])

    def __repr__(self) -> str:
        return f"Scripted({len(self.rounds)} rounds)"


def get_strategy(name: str) -> MatchingStrategy:
    """Factory function to get a matching strategy by name"""
    strategies = {
        'greedy-maximal': GreedyMaximal,
        'lexicographic': LexicographicMaximal,
        'single-edge': SingleEdge,
    }

    if name.lower() not in strategies:
        raise InputError(f"Unknown strategy: {name}. Valid options: {list(strategies.keys())}")

    return strategies[name.lower()]()
