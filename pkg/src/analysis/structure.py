"""
Girth, degeneracy and min-degree cores.

Peeling keeps one heap of vertex ids per current degree, so ties always go
to the lowest id and the elimination order is reproducible.
"""

import heapq
import math
from collections import deque
from fractions import Fraction

import networkx as nx

from graph.core import Graph
from utils.errors import InputError

BRUTEFORCE_CYCLE_MAX_N = 10


def _require_simple(g: Graph, what: str) -> None:
    if any(u == v for u, v, _ in g.edges):
        raise InputError(f"{what} needs a graph without self-loops")


def girth(g: Graph):
    """Length of the shortest cycle in edges, math.inf for a forest."""
    _require_simple(g, 'girth')
    best = math.inf
    for root in range(g.vertex_count):
        depth = {root: 0}
        parent = {root: None}
        queue = deque([root])
        while queue:
            x = queue.popleft()
            # any cycle found from here has at least 2*depth+1 edges
            if 2 * depth[x] + 1 >= best:
                break
            for y in g.neighbors(x):
                if y not in depth:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif y != parent[x]:
                    best = min(best, depth[x] + depth[y] + 1)
    return best


def shortest_cycle_bruteforce(g: Graph):
    """Enumerate every simple cycle; small graphs only."""
    if g.vertex_count > BRUTEFORCE_CYCLE_MAX_N:
        raise InputError(f"cycle enumeration is limited to n <= {BRUTEFORCE_CYCLE_MAX_N}, got {g.vertex_count}")
    _require_simple(g, 'cycle enumeration')
    return min((len(c) for c in nx.simple_cycles(g.to_networkx())), default=math.inf)


def _peel(g: Graph, stop_below=None):
    """
    Repeatedly remove a minimum-degree vertex (lowest id on ties).

    Yields (vertex, degree at removal). With stop_below set, stops as soon as
    the minimum degree reaches it.
    """
    degree = g.degrees()
    removed = [False] * g.vertex_count
    buckets: list[list[int]] = [[] for _ in range(max(degree, default=0) + 1)]
    for v, d in enumerate(degree):
        buckets[d].append(v)
    low = 0
    for _ in range(g.vertex_count):
        while True:
            while not buckets[low]:
                low += 1
            v = heapq.heappop(buckets[low])
            if not removed[v] and degree[v] == low:
                break
        if stop_below is not None and low >= stop_below:
            return
        removed[v] = True
        yield v, low
        for w in g.neighbors(v):
            if not removed[w]:
                degree[w] -= 1
                heapq.heappush(buckets[degree[w]], w)
                low = min(low, degree[w])


def degeneracy(g: Graph) -> tuple[int, list[int]]:
    """(k, elimination order); k is the largest degree seen at removal time."""
    k = 0
    order = []
    for v, d in _peel(g):
        k = max(k, d)
        order.append(v)
    return k, order


def min_degree_subgraph(g: Graph, threshold) -> list[int]:
    """Sorted vertices of the largest induced subgraph with minimum degree >= threshold (possibly empty)."""
    threshold = Fraction(threshold)
    if threshold < 0:
        raise InputError(f"threshold must be non-negative, got {threshold}")
    gone = {v for v, _ in _peel(g, stop_below=threshold)}
    return [v for v in range(g.vertex_count) if v not in gone]


def average_degree(g: Graph) -> Fraction:
    if g.vertex_count == 0:
        return Fraction(0)
    return Fraction(sum(g.degrees()), g.vertex_count)
