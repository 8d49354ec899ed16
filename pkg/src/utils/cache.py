"""
GraphCache: shared cache of generated graphs.

Filled by the sweep runner so that every (t, strategy, seed) combination of
one generator spec reuses the same instance instead of regenerating it.
"""

import threading

from gen.families import GeneratorSpec, generate
from graph.core import Graph


class GraphCache:
    def __init__(self):
        self._data: dict[GeneratorSpec, Graph] = {}
        self._lock = threading.Lock()

    def store(self, spec: GeneratorSpec, g: Graph) -> None:
        with self._lock:
            self._data[spec] = g

    def get(self, spec: GeneratorSpec) -> Graph | None:
        """Return the cached graph for a spec, or None if not cached."""
        return self._data.get(spec)

    def get_or_generate(self, spec: GeneratorSpec) -> Graph:
        g = self._data.get(spec)
        if g is None:
            g = generate(spec)
            with self._lock:
                g = self._data.setdefault(spec, g)
        return g

    def clear(self) -> None:
        """Wipe the entire cache."""
        with self._lock:
            self._data.clear()

    def __contains__(self, spec: GeneratorSpec) -> bool:
        return spec in self._data

    def __len__(self) -> int:
        return len(self._data)


# Module-level singleton, import this directly
graph_cache = GraphCache()
