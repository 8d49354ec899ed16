"""
Exception types shared across the toolkit.

Expected negative outcomes (a stretch beyond t, a failed pg check, an
infeasible routing) are returned as values. Exceptions are for bad input,
broken internal contracts and exhausted resources.
"""


class InputError(ValueError):
    """Invalid vertex id, parameter out of range, mismatched vertex sets."""


class GraphFormatError(InputError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class ScriptViolation(InputError):
    """A scripted round breaks the matching property or contains a t-spanned edge."""

    def __init__(self, round_index: int, edge: tuple[int, int], reason: str):
        super().__init__(f"round {round_index}: edge {edge[0]}-{edge[1]} {reason}")
        self.round_index = round_index
        self.edge = edge
        self.reason = reason


class ContractViolation(RuntimeError):
    """An internal invariant failed (strategy misbehaviour, probe contradiction)."""


class PathLimitExceeded(RuntimeError):
    def __init__(self, pair: tuple[int, int], cap: int):
        super().__init__(f"more than {cap} bounded paths between {pair[0]} and {pair[1]}")
        self.pair = pair
        self.cap = cap
