from fractions import Fraction

from biasplan_types import AgentKind

from ..core.graph import path_nodes, shortest_path
from ..core.traversal import Choice, abandon
from .base import Agent
from .registry import biased_agent


@biased_agent
class OptimalAgent(Agent):
    """Unbiased agent that takes a cheapest path whenever it is worth the reward."""

    kind = AgentKind.OPTIMAL

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        if node == self.graph.source and self.distances[node] > self.instance.reward:
            return abandon(node)
        path = shortest_path(self.graph, node, self.distances)
        if not path:
            return abandon(node)
        return Choice(
            edge=path[0],
            planned_path=path_nodes(node, path),
            perceived_cost=self.distances[node],
        )
