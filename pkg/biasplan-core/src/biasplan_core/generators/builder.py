from typing import List

from biasplan_types import Edge, TaskGraph
from biasplan_types.rational import Number, parse_rational


class GraphBuilder:
    """Accumulates nodes and edges in insertion order; edge ids are e0, e1, ..."""

    def __init__(self):
        self.nodes: List[str] = []
        self.edges: List[Edge] = []

    def node(self, *names: str) -> "GraphBuilder":
        for name in names:
            if name not in self.nodes:
                self.nodes.append(name)
        return self

    def edge(self, tail: str, head: str, cost: Number) -> Edge:
        self.node(tail, head)
        edge = Edge(
            id=f"e{len(self.edges)}", tail=tail, head=head, cost=parse_rational(cost)
        )
        self.edges.append(edge)
        return edge

    def build(self, source: str, target: str) -> TaskGraph:
        return TaskGraph(
            nodes=tuple(self.nodes),
            edges=tuple(self.edges),
            source=source,
            target=target,
        )
