from fractions import Fraction
from typing import Optional, Tuple

from biasplan_types import AgentKind, Edge, TaskGraph, is_infinite

from ..core.graph import Distances, path_nodes, preference_key, shortest_path
from ..core.traversal import Choice, abandon
from .base import Agent
from .registry import biased_agent


def naive_choice(
    graph: TaskGraph, b: Fraction, distances: Distances, node: str, rho: Fraction
) -> Choice:
    """
    Decision of an agent that believes its future selves follow a cheapest path.

    Each edge is perceived as b times its cost plus the unbiased remainder;
    the agent moves along the best edge unless even that exceeds `rho`.
    """
    best: Optional[Tuple[tuple, Edge]] = None
    for position, edge in graph.out_edges(node):
        remainder = distances[edge.head]
        if is_infinite(remainder):
            continue
        key = preference_key(b * edge.cost + remainder, edge, position)
        if best is None or key < best[0]:
            best = (key, edge)

    if best is None or best[0][0] > rho:
        return abandon(node)
    perceived, edge = best[0][0], best[1]
    rest = shortest_path(graph, edge.head, distances)
    return Choice(
        edge=edge,
        planned_path=(node,) + path_nodes(edge.head, rest),
        perceived_cost=perceived,
    )


@biased_agent
class NaivePresentBiasedAgent(Agent):
    """Present-biased agent, naive about its future bias, free of sunk-cost bias."""

    kind = AgentKind.NAIVE_PRESENT_BIASED

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        return naive_choice(self.graph, self.b, self.distances, node, rho)


@biased_agent
class DoublyNaiveAgent(Agent):
    """Agent naive about both its present bias and its sunk-cost bias."""

    kind = AgentKind.DOUBLY_NAIVE

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        return naive_choice(self.graph, self.b, self.distances, node, rho)
