"""
Immutable undirected graph, bounded shortest-path queries, induced subgraphs
and connected components.

Vertex ids are dense integers 0..n-1. Edge lengths are positive ints or
Fractions (unit graphs keep plain ints so BFS stays cheap). Adjacency lists
are sorted so every traversal visits vertices in the same order on every run.
"""

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import networkx as nx

from utils.errors import InputError

Length = int | Fraction
Edge = tuple[int, int, Length]


class _BeyondCap:
    """Distance larger than the search radius (not necessarily disconnected). Orders above every number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return 'BEYOND_CAP'

    def __gt__(self, other) -> bool:
        return other is not self

    def __ge__(self, other) -> bool:
        return True

    def __lt__(self, other) -> bool:
        return False

    def __le__(self, other) -> bool:
        return other is self

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash('BEYOND_CAP')


BEYOND_CAP = _BeyondCap()


def normalize_length(value) -> Length:
    length = Fraction(value)
    if length <= 0:
        raise InputError(f"edge length must be positive, got {value}")
    return int(length) if length.denominator == 1 else length


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    allows_self_loops: bool = False
    labels: tuple[int, ...] | None = None
    _adjacency: tuple[tuple[tuple[int, int], ...], ...] = field(init=False, repr=False, compare=False)
    _edge_ids: dict = field(init=False, repr=False, compare=False)
    _unit: bool = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {self.vertex_count}")
        n = self.vertex_count
        normalized = []
        edge_ids = {}
        incident = [[] for _ in range(n)]
        for u, v, length in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge {u}-{v} references a vertex outside 0..{n - 1}")
            if u > v:
                u, v = v, u
            if u == v and not self.allows_self_loops:
                raise InputError(f"self-loop at {u} in a graph without self-loops")
            if u != v and (u, v) in edge_ids:
                raise InputError(f"duplicate edge {u}-{v}")
            eid = len(normalized)
            normalized.append((u, v, normalize_length(length)))
            if u != v:
                edge_ids[(u, v)] = eid
                incident[u].append((v, eid))
                incident[v].append((u, eid))
            else:
                incident[u].append((u, eid))
        object.__setattr__(self, 'edges', tuple(normalized))
        object.__setattr__(self, '_edge_ids', edge_ids)
        object.__setattr__(self, '_adjacency', tuple(tuple(sorted(lst)) for lst in incident))
        object.__setattr__(self, '_unit', all(e[2] == 1 for e in normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Sequence], allows_self_loops: bool = False) -> 'Graph':
        """Build from (u, v) or (u, v, length) tuples; missing lengths default to 1."""
        full = [(e[0], e[1], e[2] if len(e) > 2 else 1) for e in edges]
        return cls(vertex_count, tuple(full), allows_self_loops=allows_self_loops)

    @classmethod
    def from_networkx(cls, nxg: nx.Graph, length_attr: str | None = None) -> 'Graph':
        """Relabel nodes densely in sorted order; edges come out canonical and sorted."""
        nodes = sorted(nxg.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = []
        for a, b, data in nxg.edges(data=True):
            u, v = sorted((index[a], index[b]))
            length = data.get(length_attr, 1) if length_attr else 1
            edges.append((u, v, length))
        edges.sort(key=lambda e: (e[0], e[1]))
        return cls(len(nodes), tuple(edges), allows_self_loops=any(u == v for u, v, _ in edges))

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.vertex_count))
        for u, v, length in self.edges:
            if u != v:
                nxg.add_edge(u, v, length=length)
        return nxg

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_unit(self) -> bool:
        return self._unit

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.vertex_count):
            raise InputError(f"vertex {v} is not in 0..{self.vertex_count - 1}")

    def incident(self, v: int) -> tuple[tuple[int, int], ...]:
        """(neighbor, edge_id) pairs at v, sorted."""
        return self._adjacency[v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self._adjacency[v] if w != v]

    def degree(self, v: int) -> int:
        """Self-loops count once each."""
        return len(self._adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adjacency]

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_ids

    def edge_id(self, u: int, v: int) -> int:
        key = (min(u, v), max(u, v))
        if key not in self._edge_ids:
            raise InputError(f"no edge {u}-{v}")
        return self._edge_ids[key]

    def edge_pairs(self) -> list[tuple[int, int]]:
        return [(u, v) for u, v, _ in self.edges]

    def length(self, eid: int) -> Length:
        return self.edges[eid][2]

    def spanning_subgraph(self, pairs: Iterable[tuple[int, int]]) -> 'Graph':
        """Same vertex set, the given edges (lengths copied from this graph), in the given order."""
        chosen = [self.edges[self.edge_id(u, v)] for u, v in pairs]
        return Graph(self.vertex_count, tuple(chosen), allows_self_loops=self.allows_self_loops)

    def with_lengths(self, lengths: Sequence[Length]) -> 'Graph':
        edges = tuple((u, v, lengths[i]) for i, (u, v, _) in enumerate(self.edges))
        return Graph(self.vertex_count, edges, allows_self_loops=self.allows_self_loops, labels=self.labels)


@dataclass(frozen=True)
class DistanceResult:
    source: int
    distances: dict[int, Length]
    cap: Length

    def get(self, v: int):
        return self.distances.get(v, BEYOND_CAP)

    def __contains__(self, v: int) -> bool:
        return v in self.distances


def hop_ball(adjacency: Sequence[Iterable[int]], source: int, cap: int, target: int | None = None) -> dict[int, int]:
    """
    BFS over unit lengths, truncated at cap hops.

    adjacency[v] yields neighbour ids; the partial spanner passes its mutable
    sets here directly. Stops early once target is reached.
    """
    dist = {source: 0}
    if source == target:
        return dist
    frontier = deque([source])
    while frontier:
        x = frontier.popleft()
        d = dist[x]
        if d >= cap:
            continue
        for y in adjacency[x]:
            if y not in dist:
                dist[y] = d + 1
                if y == target:
                    return dist
                frontier.append(y)
    return dist


def _weighted_ball(g: Graph, source: int, cap: Length, target: int | None = None) -> dict[int, Length]:
    dist = {source: 0}
    done = set()
    heap = [(0, source)]
    while heap:
        d, x = heapq.heappop(heap)
        if x in done:
            continue
        done.add(x)
        if x == target:
            break
        for y, eid in g.incident(x):
            nd = d + g.edges[eid][2]
            if nd <= cap and (y not in dist or nd < dist[y]):
                dist[y] = nd
                heapq.heappush(heap, (nd, y))
    return dist


class _Neighbors:
    def __init__(self, g: Graph):
        self._g = g

    def __getitem__(self, v: int):
        return (w for w, _ in self._g.incident(v))


def bounded_bfs(g: Graph, source: int, cap: Length) -> DistanceResult:
    g.check_vertex(source)
    if cap < 0:
        raise InputError(f"cap must be non-negative, got {cap}")
    if g.is_unit:
        dist = hop_ball(_Neighbors(g), source, math.floor(cap))
    else:
        dist = _weighted_ball(g, source, cap)
    return DistanceResult(source=source, distances=dist, cap=cap)


def distance_within(g: Graph, u: int, v: int, cap: Length):
    """d_g(u, v) if it is at most cap, else BEYOND_CAP."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    if g.is_unit:
        dist = hop_ball(_Neighbors(g), u, math.floor(cap), target=v)
    else:
        dist = _weighted_ball(g, u, cap, target=v)
    d = dist.get(v)
    return d if d is not None and d <= cap else BEYOND_CAP


def all_pairs_within(g: Graph, cap: Length) -> dict[int, dict[int, Length]]:
    return {s: bounded_bfs(g, s, cap).distances for s in range(g.vertex_count)}


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """G[U] with U relabelled 0..|U|-1 in increasing order; labels maps new ids back to g's."""
    chosen = sorted(set(vertices))
    for v in chosen:
        g.check_vertex(v)
    index = {v: i for i, v in enumerate(chosen)}
    edges = tuple(
        (index[u], index[v], length) for u, v, length in g.edges if u in index and v in index
    )
    back = tuple(g.labels[v] for v in chosen) if g.labels is not None else tuple(chosen)
    return Graph(len(chosen), edges, allows_self_loops=g.allows_self_loops, labels=back)


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex (isolated vertices are singletons)."""
    seen = [False] * g.vertex_count
    components = []
    for root in range(g.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        members = [root]
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, _ in g.incident(x):
                if not seen[y]:
                    seen[y] = True
                    members.append(y)
                    queue.append(y)
        components.append(sorted(members))
    return components
