from fractions import Fraction
from typing import Dict, List, Optional, Tuple, Union

from biasplan_types import INFINITY, Edge, TaskGraph, is_infinite

from .ordering import preference_key, topological_order

Distances = Dict[str, Union[Fraction, float]]


def shortest_path_costs(graph: TaskGraph) -> Distances:
    """
    Exact cheapest cost from every node to the target.

    Backward dynamic programming over the topological order. Nodes that
    cannot reach the target map to INFINITY.
    """
    costs: Distances = {}
    for node in reversed(topological_order(graph)):
        if node == graph.target:
            costs[node] = Fraction(0)
            continue
        best: Union[Fraction, float] = INFINITY
        for _, edge in graph.out_edges(node):
            candidate = edge.cost + costs[edge.head]
            if candidate < best:
                best = candidate
        costs[node] = best
    return costs


def shortest_path(
    graph: TaskGraph, start: str, costs: Optional[Distances] = None
) -> List[Edge]:
    """Canonical cheapest path from `start` to the target, empty if there is none."""
    if costs is None:
        costs = shortest_path_costs(graph)
    path: List[Edge] = []
    node = start
    if is_infinite(costs[node]):
        return path
    while node != graph.target:
        _, _, edge = min(
            (preference_key(edge.cost + costs[edge.head], edge, position), position, edge)
            for position, edge in graph.out_edges(node)
            if not is_infinite(costs[edge.head])
        )
        path.append(edge)
        node = edge.head
    return path


def path_nodes(start: str, edges: List[Edge]) -> Tuple[str, ...]:
    return (start,) + tuple(edge.head for edge in edges)


def bellman_violations(graph: TaskGraph, costs: Distances) -> List[str]:
    """Nodes whose value is not the best one-edge extension of its successors."""
    problems: List[str] = []
    for node in graph.nodes:
        if node == graph.target:
            if costs[node] != 0:
                problems.append(f"target has value {costs[node]}")
            continue
        options = [edge.cost + costs[edge.head] for _, edge in graph.out_edges(node)]
        expected = min(options, default=INFINITY)
        if costs[node] != expected:
            problems.append(f"node '{node}' has value {costs[node]}, expected {expected}")
    return problems
