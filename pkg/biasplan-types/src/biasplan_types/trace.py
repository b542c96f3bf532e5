from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple

from typing_extensions import Self

from pydantic import model_validator

from .agent_kind import AgentKind
from .biasplan_base import BiasplanModel
from .instance import AgentParams
from .rational import Rational

ABANDON = "ABANDON"
FINISH = "FINISH"


class StepAction(str, Enum):
    MOVE = "move"
    ABANDON = "abandon"
    FINISH = "finish"


class OutcomeKind(str, Enum):
    REACHED = "reached"
    ABANDONED = "abandoned"
    NEVER_STARTED = "never-started"


class TraceStep(BiasplanModel):
    """One decision of the agent, taken at `node` with `sunk_cost` behind it."""

    node: str
    sunk_cost: Rational
    perceived_reward: Rational
    planned_path: Tuple[str, ...]
    action: StepAction
    edge_id: Optional[str] = None
    perceived_cost: Optional[Rational] = None

    @model_validator(mode="after")
    def check_edge(self) -> Self:
        if (self.action == StepAction.MOVE) != (self.edge_id is not None):
            raise ValueError("A move step names its edge and only a move step does")
        return self

    @property
    def decision(self) -> str:
        if self.action == StepAction.MOVE:
            return self.edge_id
        return ABANDON if self.action == StepAction.ABANDON else FINISH


class TraversalTrace(BiasplanModel):
    """Full record of one simulated traversal."""

    kind: AgentKind
    reward: Rational
    params: AgentParams
    steps: Tuple[TraceStep, ...]
    outcome: OutcomeKind
    abandoned_at: Optional[str] = None
    total_cost: Rational
    payoff: Rational

    @model_validator(mode="after")
    def check_outcome(self) -> Self:
        if (self.outcome == OutcomeKind.ABANDONED) != (self.abandoned_at is not None):
            raise ValueError("abandoned_at is set exactly when the agent abandons")
        return self

    @property
    def path(self) -> Tuple[str, ...]:
        """Nodes visited, in order."""
        return tuple(step.node for step in self.steps)

    @property
    def reached(self) -> bool:
        return self.outcome == OutcomeKind.REACHED

    @property
    def started(self) -> bool:
        return self.outcome != OutcomeKind.NEVER_STARTED

    @property
    def outcome_label(self) -> str:
        if self.outcome == OutcomeKind.REACHED:
            return "Reached"
        if self.outcome == OutcomeKind.NEVER_STARTED:
            return "NeverStarted"
        return f"AbandonedAt({self.abandoned_at})"

    def same_walk(self, other: "TraversalTrace") -> bool:
        """Equal steps, outcome and money, regardless of which kind produced them."""
        return (
            self.steps == other.steps
            and self.outcome == other.outcome
            and self.abandoned_at == other.abandoned_at
            and self.total_cost == other.total_cost
            and self.payoff == other.payoff
        )


class SwitchSummary(BiasplanModel):
    """Plan changes along a trace and the cost paid between them.

    `segment_costs[0]` runs from the source to the first switch node and the
    last segment runs to the end of the trace, so there is always one more
    segment than switches.
    """

    switch_nodes: Tuple[str, ...]
    segment_costs: Tuple[Rational, ...]

    @property
    def count(self) -> int:
        return len(self.switch_nodes)

    @property
    def total(self) -> Fraction:
        return sum(self.segment_costs, Fraction(0))
