"""Agents sophisticated about one bias and naive about the other."""

from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from biasplan_types import INFINITY, AgentKind, Edge, is_infinite

from ..core.graph import preference_key
from ..core.traversal import Choice, abandon
from .base import Agent
from .registry import biased_agent
from .sophisticated import plan_choice, sophisticated_plan

Belief = Tuple[Union[Fraction, float], Optional[Edge]]


@biased_agent
class SinglySophisticatedAgent(Agent):
    """
    Sophisticated about present bias, naive about sunk-cost bias.

    At every node it plans as a (b, 0)-sophisticated agent against the reward
    it currently perceives, believing that future selves will keep exactly
    that perceived reward. Since the perceived reward grows with sunk cost,
    the plan can change along the way.
    """

    kind = AgentKind.SINGLY_SOPHISTICATED

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        plan = sophisticated_plan(self.graph, self.b, rho)
        return plan_choice(self.graph, plan, node)


@biased_agent
class NaivePresentSophSunkAgent(Agent):
    """
    Naive about present bias, sophisticated about sunk-cost bias.

    The agent believes its future selves are (1, lambda)-sophisticated: they
    see costs without present bias but do account for their growing sunk
    cost when deciding whether to go on.
    """

    kind = AgentKind.NAIVE_PRESENT_SOPH_SUNK

    def __init__(self, instance):
        super().__init__(instance)
        # (node, sunk) -> (believed remaining cost, edge the future self takes)
        self._believed: Dict[Tuple[str, Fraction], Belief] = {}

    def _future_self(self, node: str, sunk: Fraction) -> Belief:
        key = (node, sunk)
        if key in self._believed:
            return self._believed[key]
        if node == self.graph.target:
            self._believed[key] = (Fraction(0), None)
            return self._believed[key]

        best = None
        for position, edge in self.graph.out_edges(node):
            remaining, _ = self._future_self(edge.head, sunk + edge.cost)
            if is_infinite(remaining):
                continue
            candidate = preference_key(edge.cost + remaining, edge, position)
            if best is None or candidate < best[0]:
                best = (candidate, edge)

        limit = self.instance.reward + self.lam * sunk
        if best is None or best[0][0] > limit:
            self._believed[key] = (INFINITY, None)
        else:
            self._believed[key] = (best[0][0], best[1])
        return self._believed[key]

    def _believed_path(self, node: str, sunk: Fraction) -> Tuple[str, ...]:
        path = [node]
        _, edge = self._future_self(node, sunk)
        while edge is not None:
            sunk += edge.cost
            node = edge.head
            path.append(node)
            _, edge = self._future_self(node, sunk)
        return tuple(path)

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        best = None
        for position, edge in self.graph.out_edges(node):
            remaining, _ = self._future_self(edge.head, sunk + edge.cost)
            if is_infinite(remaining):
                continue
            candidate = preference_key(self.b * edge.cost + remaining, edge, position)
            if best is None or candidate < best[0]:
                best = (candidate, edge)

        if best is None or best[0][0] > rho:
            return abandon(node)
        edge = best[1]
        return Choice(
            edge=edge,
            planned_path=(node,) + self._believed_path(edge.head, sunk + edge.cost),
            perceived_cost=best[0][0],
        )
