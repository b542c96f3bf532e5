from fractions import Fraction

from biasplan_types import AgentKind, TraversalTrace

from ..core.traversal import Choice
from ..planners.doubly_soph import policy_rule, recursive_states
from .base import Agent
from .registry import biased_agent


@biased_agent
class DoublySophisticatedAgent(Agent):
    """Agent sophisticated about both biases; replays the recursive state policy."""

    kind = AgentKind.DOUBLY_SOPHISTICATED

    def __init__(self, instance):
        super().__init__(instance)
        self.result = recursive_states(instance)
        self._rule = policy_rule(self.graph, self.result.policy)

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        return self._rule(node, sunk, rho)

    def run(self) -> TraversalTrace:
        return self.result.trace
