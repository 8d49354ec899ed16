"""
Text formats for cuts, demands and flows.

    c <u> <v> <k>/<h>          cut value k/h on edge {u, v}
    d <u> <v> <value>          demand from u to v
    f <value> : v0 v1 ... vk   flow along a path

'#' lines are comments. A cut file with no 'c' lines states its resolution
with '# h <h>'.
"""

from fractions import Fraction

from cuts.demand import Demand
from cuts.flow import Flow
from cuts.moving_cut import MovingCut
from graph.core import Graph
from graph.edgelist import format_length
from utils.errors import GraphFormatError, InputError


def _records(text: str, tag: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        parts = line.split()
        if parts[0] != tag:
            raise GraphFormatError(lineno, f"expected a '{tag}' record, got {line!r}")
        yield lineno, line, parts[1:]


def _declared_h(text: str) -> int | None:
    for raw in text.splitlines():
        parts = raw.strip().lstrip('#').split()
        if raw.strip().startswith('#') and len(parts) == 2 and parts[0] == 'h':
            return int(parts[1])
    return None


def parse_cut(text: str, g: Graph) -> MovingCut:
    h = _declared_h(text)
    values = {}
    for lineno, line, fields in _records(text, 'c'):
        if len(fields) != 3:
            raise GraphFormatError(lineno, f"expected 'c <u> <v> <k>/<h>', got {line!r}")
        num, slash, den = fields[2].partition('/')
        try:
            u, v, k = int(fields[0]), int(fields[1]), int(num)
            line_h = int(den) if slash else None
        except ValueError:
            raise GraphFormatError(lineno, f"malformed cut record {line!r}")
        if line_h is None:
            raise GraphFormatError(lineno, f"cut value needs the form k/h, got {fields[2]!r}")
        if h is None:
            h = line_h
        elif line_h != h:
            raise GraphFormatError(lineno, f"cut resolution {line_h} differs from {h}")
        try:
            eid = g.edge_id(u, v)
        except InputError:
            raise GraphFormatError(lineno, f"{u}-{v} is not an edge of the graph")
        if eid in values:
            raise GraphFormatError(lineno, f"duplicate cut value for {u}-{v}")
        values[eid] = k
    if h is None:
        raise GraphFormatError(1, "empty cut needs a '# h <h>' line")
    try:
        return MovingCut(h, values)
    except InputError as e:
        raise GraphFormatError(1, str(e))


def format_cut(cut: MovingCut, g: Graph) -> str:
    lines = [f"# h {cut.h}"]
    for eid in sorted(cut.values, key=lambda e: g.edges[e][:2]):
        u, v, _ = g.edges[eid]
        lines.append(f"c {u} {v} {cut.values[eid]}/{cut.h}")
    return "\n".join(lines) + "\n"


def parse_demand(text: str) -> Demand:
    values = {}
    for lineno, line, fields in _records(text, 'd'):
        if len(fields) != 3:
            raise GraphFormatError(lineno, f"expected 'd <u> <v> <value>', got {line!r}")
        try:
            u, v, value = int(fields[0]), int(fields[1]), Fraction(fields[2])
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(lineno, f"malformed demand record {line!r}")
        if value < 0:
            raise GraphFormatError(lineno, f"negative demand in {line!r}")
        values[(u, v)] = values.get((u, v), Fraction(0)) + value
    return Demand(values)


def format_demand(demand: Demand) -> str:
    return "".join(f"d {u} {v} {format_length(value)}\n" for (u, v), value in demand.items())


def parse_flow(text: str) -> Flow:
    flow = Flow()
    for lineno, line, fields in _records(text, 'f'):
        if len(fields) < 4 or fields[1] != ':':
            raise GraphFormatError(lineno, f"expected 'f <value> : v0 v1 ...', got {line!r}")
        try:
            value = Fraction(fields[0])
            path = tuple(int(x) for x in fields[2:])
            flow.add(path, value)
        except (ValueError, ZeroDivisionError, InputError):
            raise GraphFormatError(lineno, f"malformed flow record {line!r}")
    return flow


def format_flow(flow: Flow) -> str:
    return "".join(
        f"f {format_length(value)} : {' '.join(str(x) for x in path)}\n" for path, value in flow.paths
    )


def read_text(path: str) -> str:
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def write_text(path: str, text: str) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(text)
