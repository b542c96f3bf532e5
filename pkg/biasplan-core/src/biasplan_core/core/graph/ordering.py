from fractions import Fraction
from typing import List, Tuple, Union

import networkx as nx
from biasplan_types import Edge, TaskGraph


def to_networkx(graph: TaskGraph) -> nx.MultiDiGraph:
    """Structure-only view of the task graph; parallel edges are keyed by edge id."""
    view = nx.MultiDiGraph()
    view.add_nodes_from(graph.nodes)
    for edge in graph.edges:
        view.add_edge(edge.tail, edge.head, key=edge.id, cost=edge.cost)
    return view


def topological_order(graph: TaskGraph) -> List[str]:
    """Topological order that follows node insertion order wherever it is free to."""
    return list(
        nx.lexicographical_topological_sort(
            to_networkx(graph), key=graph.node_position
        )
    )


def preference_key(
    perceived: Union[Fraction, float], edge: Edge, position: int
) -> Tuple[Union[Fraction, float], Fraction, int]:
    """
    Ordering used by every planner to pick among outgoing edges.

    Lower perceived cost wins, then the cheaper immediate edge, then the edge
    declared first.
    """
    return (perceived, edge.cost, position)
