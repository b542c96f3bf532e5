import re
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from pydantic import Field, PrivateAttr, field_validator

from .biasplan_base import BiasplanModel
from .rational import Rational

_IDENTIFIER = re.compile(r"^[A-Za-z0-9_.:\-]+$")


def check_identifier(value: str) -> str:
    if not _IDENTIFIER.match(value):
        raise ValueError(f"Invalid identifier: {value!r}")
    return value


class Edge(BiasplanModel):
    """A task: moving from `tail` to `head` costs `cost`."""

    id: str = Field(..., description="Unique edge identifier")
    tail: str
    head: str
    cost: Rational

    @field_validator("id", "tail", "head")
    @classmethod
    def validate_identifier(cls, v: str) -> str:
        return check_identifier(v)


class TaskGraph(BiasplanModel):
    """
    Directed task graph with a designated source and target.

    Node and edge order is significant: edge position is the last tie-break
    key of every planner, and node position keeps topological orders stable.
    Structural invariants (acyclicity, reachability, non-negative costs,
    unique identifiers) are checked by `biasplan_core.core.graph.validate`,
    so a TaskGraph can hold an invalid graph long enough to report on it.
    """

    nodes: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    source: str
    target: str

    _out: Dict[str, List[Tuple[int, Edge]]] = PrivateAttr(default_factory=dict)
    _edge_by_id: Dict[str, Edge] = PrivateAttr(default_factory=dict)
    _node_position: Dict[str, int] = PrivateAttr(default_factory=dict)

    @field_validator("nodes")
    @classmethod
    def validate_nodes(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        for node in v:
            check_identifier(node)
        return v

    def model_post_init(self, __context: Any) -> None:
        for position, node in enumerate(self.nodes):
            self._node_position.setdefault(node, position)
            self._out.setdefault(node, [])
        for position, edge in enumerate(self.edges):
            self._out.setdefault(edge.tail, []).append((position, edge))
            self._edge_by_id.setdefault(edge.id, edge)

    def out_edges(self, node: str) -> List[Tuple[int, Edge]]:
        """Outgoing edges of `node` paired with their canonical position."""
        return self._out.get(node, [])

    def edge(self, edge_id: str) -> Edge:
        return self._edge_by_id[edge_id]

    def has_edge(self, edge_id: str) -> bool:
        return edge_id in self._edge_by_id

    def node_position(self, node: str) -> int:
        return self._node_position[node]

    @property
    def total_cost(self) -> Fraction:
        return sum((edge.cost for edge in self.edges), Fraction(0))

    @property
    def has_integer_costs(self) -> bool:
        return all(edge.cost.denominator == 1 for edge in self.edges)
