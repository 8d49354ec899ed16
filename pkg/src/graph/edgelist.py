"""
Edge-list text format.

    # comment
    p <n> <m>
    e <u> <v> [w]

Ids are 0-based; w defaults to 1 and may be an integer or a fraction p/q.
The writer emits the canonical form (edges sorted, lowest endpoint first,
weight column only when it is not 1) so write(read(x)) reproduces a
canonical file byte for byte.
"""

from fractions import Fraction

from graph.core import Graph
from utils.errors import GraphFormatError


def format_length(length) -> str:
    value = Fraction(length)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def parse_graph(text: str) -> Graph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if parts[0] == 'p':
            if header is not None:
                raise GraphFormatError(lineno, "second 'p' header")
            if len(parts) != 3:
                raise GraphFormatError(lineno, f"expected 'p <n> <m>', got {line!r}")
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise GraphFormatError(lineno, f"non-integer header {line!r}")
            if header[0] < 0 or header[1] < 0:
                raise GraphFormatError(lineno, f"negative count in header {line!r}")
        elif parts[0] == 'e':
            if header is None:
                raise GraphFormatError(lineno, "edge before 'p' header")
            if len(parts) not in (3, 4):
                raise GraphFormatError(lineno, f"expected 'e <u> <v> [w]', got {line!r}")
            try:
                u, v = int(parts[1]), int(parts[2])
                w = Fraction(parts[3]) if len(parts) == 4 else 1
            except (ValueError, ZeroDivisionError):
                raise GraphFormatError(lineno, f"malformed edge {line!r}")
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise GraphFormatError(lineno, f"vertex out of range in {line!r}")
            if u == v:
                raise GraphFormatError(lineno, f"self-loop in {line!r}")
            if w <= 0:
                raise GraphFormatError(lineno, f"non-positive weight in {line!r}")
            edges.append((u, v, w, lineno))
        else:
            raise GraphFormatError(lineno, f"unknown record type {parts[0]!r}")

    if header is None:
        raise GraphFormatError(1, "missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(lineno if text else 1, f"header declares {m} edges, found {len(edges)}")
    seen = set()
    for u, v, _, lineno in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphFormatError(lineno, f"duplicate edge {u}-{v}")
        seen.add(key)
    return Graph(n, tuple((u, v, w) for u, v, w, _ in edges))


def format_graph(g: Graph) -> str:
    lines = [f"p {g.vertex_count} {g.edge_count}"]
    for u, v, w in sorted(g.edges, key=lambda e: (e[0], e[1])):
        lines.append(f"e {u} {v}" if w == 1 else f"e {u} {v} {format_length(w)}")
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, 'r', encoding='utf-8') as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(format_graph(g))
