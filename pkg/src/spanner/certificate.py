"""
Certificate and round-statistics files.

Certificate lines look like ``r 2 : 1-2 3-4``; rounds are numbered from 1
and written in order. An empty round is written as ``r <i> :``.
"""

import csv

from spanner.greedy import PgSequence, RoundStat
from utils.errors import GraphFormatError

ROUND_CSV_FIELDS = ['round', 'matching_size', 'cumulative_edges', 'millis']


def format_certificate(seq: PgSequence) -> str:
    lines = [f"# n {seq.vertex_count}"]
    for i, rnd in enumerate(seq.rounds, 1):
        body = " ".join(f"{u}-{v}" for u, v in rnd)
        lines.append(f"r {i} : {body}".rstrip())
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, vertex_count: int | None = None) -> PgSequence:
    rounds = []
    n = vertex_count
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            parts = line[1:].split()
            if len(parts) == 2 and parts[0] == 'n' and n is None:
                n = int(parts[1])
            continue
        head, sep, body = line.partition(':')
        head_parts = head.split()
        if not sep or len(head_parts) != 2 or head_parts[0] != 'r':
            raise GraphFormatError(lineno, f"expected 'r <i> : u-v ...', got {line!r}")
        try:
            index = int(head_parts[1])
        except ValueError:
            raise GraphFormatError(lineno, f"non-integer round index in {line!r}")
        if index != len(rounds) + 1:
            raise GraphFormatError(lineno, f"round {index} out of order, expected {len(rounds) + 1}")
        edges = []
        for token in body.split():
            a, dash, b = token.partition('-')
            try:
                u, v = int(a), int(b)
            except ValueError:
                raise GraphFormatError(lineno, f"malformed edge {token!r}")
            if not dash:
                raise GraphFormatError(lineno, f"malformed edge {token!r}")
            edges.append((u, v))
        rounds.append(edges)
    if n is None:
        n = 1 + max((max(u, v) for r in rounds for u, v in r), default=-1)
    return PgSequence.from_rounds(n, rounds)


def write_certificate(seq: PgSequence, path: str) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(format_certificate(seq))


def read_certificate(path: str, vertex_count: int | None = None) -> PgSequence:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_certificate(f.read(), vertex_count)


def write_round_csv(stats: list[RoundStat], path: str) -> None:
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(ROUND_CSV_FIELDS)
        for s in stats:
            writer.writerow([s.round_index, s.matching_size, s.cumulative_edges, f"{s.millis:.3f}"])
