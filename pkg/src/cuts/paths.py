"""
Length-bounded simple path enumeration.

Iterative DFS with an explicit stack; a branch is cut as soon as its length
so far plus the remaining distance to the target exceeds the budget.
"""

import os
from concurrent.futures import ThreadPoolExecutor

from dotenv import load_dotenv

from graph.core import Graph, bounded_bfs
from utils.errors import InputError, PathLimitExceeded

load_dotenv()

PATH_CAP = int(os.getenv('SPANNER_PATH_CAP', '1000000'))

Path = tuple[int, ...]


def bounded_paths(g: Graph, source: int, target: int, budget, cap: int = PATH_CAP):
    """
    Yield every simple source-target path of total length <= budget, as
    vertex tuples, in sorted-neighbour DFS order.

    Raises PathLimitExceeded once more than cap paths have been produced.
    """
    g.check_vertex(source)
    g.check_vertex(target)
    if source == target:
        raise InputError(f"path endpoints must differ, got {source} twice")
    remaining = bounded_bfs(g, target, budget).distances
    if source not in remaining:
        return
    count = 0
    path = [source]
    on_path = {source}
    used = [0]
    stack = [iter(g.incident(source))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            on_path.discard(path.pop())
            used.pop()
            continue
        y, eid = step
        if y in on_path:
            continue
        length = used[-1] + g.edges[eid][2]
        if y not in remaining or length + remaining[y] > budget:
            continue
        if y == target:
            count += 1
            if count > cap:
                raise PathLimitExceeded((source, target), cap)
            yield tuple(path) + (y,)
            continue
        path.append(y)
        on_path.add(y)
        used.append(length)
        stack.append(iter(g.incident(y)))


def paths_for_pairs(g: Graph, pairs: list[tuple[int, int]], budget, cap: int = PATH_CAP, threads: int = 1) -> list[list[Path]]:
    """bounded_paths for each pair, in pair order; distinct pairs may be enumerated concurrently."""
    def collect(pair):
        return list(bounded_paths(g, pair[0], pair[1], budget, cap))

    if threads <= 1 or len(pairs) < 2:
        return [collect(p) for p in pairs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(collect, pairs))


def path_edge_ids(g: Graph, path: Path) -> list[int]:
    return [g.edge_id(a, b) for a, b in zip(path, path[1:])]


def path_length(g: Graph, path: Path):
    return sum(g.length(eid) for eid in path_edge_ids(g, path))
