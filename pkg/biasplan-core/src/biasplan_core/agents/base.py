from abc import ABC, abstractmethod
from fractions import Fraction
from typing import ClassVar

from biasplan_types import AgentKind, Instance, TraversalTrace

from ..core.graph import Distances, shortest_path_costs
from ..core.logger import Logger
from ..core.traversal import Choice, walk


class Agent(ABC):
    """
    Abstract base class for every simulated agent kind.

    Subclasses set `kind` and implement `decide`, which is called once per
    visited non-target node with the sunk cost so far and the agent's current
    perceived reward. The walk itself, trace bookkeeping and payoff are
    shared:

    ```python
    @biased_agent
    class MyAgent(Agent):
        kind = AgentKind.OPTIMAL

        def decide(self, node, sunk, rho) -> Choice:
            ...
    ```
    """

    kind: ClassVar[AgentKind]

    def __init__(self, instance: Instance):
        self.instance = instance
        self.graph = instance.graph
        self.b = instance.params.b
        self.lam = instance.params.lam if self.kind.uses_sunk_cost else Fraction(0)
        self._distances: Distances | None = None

    @classmethod
    def name(cls) -> str:
        return cls.kind.value

    @property
    def distances(self) -> Distances:
        """Unbiased cost to the target from every node, computed on first use."""
        if self._distances is None:
            self._distances = shortest_path_costs(self.graph)
        return self._distances

    @abstractmethod
    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        pass

    def run(self) -> TraversalTrace:
        trace = walk(self.instance, self.kind, self.lam, self.decide)
        Logger.debug(
            self.instance.label or "simulate",
            {
                "agent": self.name(),
                "outcome": trace.outcome_label,
                "total_cost": str(trace.total_cost),
            },
        )
        return trace
