"""
Small directed flow networks on top of networkx.

Arcs without a capacity are uncapacitated. Capacities are kept integral so
networkx's push-relabel returns exact values.
"""

import networkx as nx
from networkx.algorithms.flow import preflow_push


class FlowNetwork:
    SOURCE = ('source',)
    SINK = ('sink',)

    def __init__(self):
        self.digraph = nx.DiGraph()
        self.digraph.add_node(self.SOURCE)
        self.digraph.add_node(self.SINK)

    def add_arc(self, tail, head, capacity: int | None = None) -> None:
        """Add capacity to tail->head; capacity None makes the arc unbounded."""
        if capacity is None:
            if self.digraph.has_edge(tail, head):
                self.digraph[tail][head].pop('capacity', None)
            else:
                self.digraph.add_edge(tail, head)
            return
        if self.digraph.has_edge(tail, head):
            data = self.digraph[tail][head]
            if 'capacity' in data:
                data['capacity'] += capacity
            return
        self.digraph.add_edge(tail, head, capacity=capacity)

    def max_flow(self) -> int:
        return nx.maximum_flow_value(self.digraph, self.SOURCE, self.SINK, flow_func=preflow_push)

    def max_flow_with_arcs(self) -> tuple[int, dict]:
        """Flow value plus the per-arc flow dict (flow[tail][head])."""
        return nx.maximum_flow(self.digraph, self.SOURCE, self.SINK, flow_func=preflow_push)
