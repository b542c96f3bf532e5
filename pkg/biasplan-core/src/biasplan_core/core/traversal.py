from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from biasplan_types import (
    AgentKind,
    Edge,
    Instance,
    OutcomeKind,
    StepAction,
    TraceStep,
    TraversalTrace,
)


@dataclass(frozen=True)
class Choice:
    """What an agent does at a non-target node.

    `edge` is None when the agent abandons.
    """

    edge: Optional[Edge]
    planned_path: Tuple[str, ...]
    perceived_cost: Optional[Fraction] = None


# (node, sunk cost, perceived reward) -> Choice
DecisionRule = Callable[[str, Fraction, Fraction], Choice]


def perceived_reward(reward: Fraction, lam: Fraction, sunk: Fraction) -> Fraction:
    return reward + lam * sunk


def abandon(node: str) -> Choice:
    return Choice(edge=None, planned_path=(node,))


def walk(
    instance: Instance, kind: AgentKind, lam: Fraction, decide: DecisionRule
) -> TraversalTrace:
    """
    Walk from the source applying `decide` at every node until the agent
    reaches the target or abandons. `lam` is the sunk-cost weight the agent
    actually applies to its reward.
    """
    graph = instance.graph
    node, sunk = graph.source, Fraction(0)
    steps: List[TraceStep] = []

    while True:
        rho = perceived_reward(instance.reward, lam, sunk)
        if node == graph.target:
            steps.append(
                TraceStep(
                    node=node,
                    sunk_cost=sunk,
                    perceived_reward=rho,
                    planned_path=(node,),
                    action=StepAction.FINISH,
                )
            )
            return _close(instance, kind, steps, OutcomeKind.REACHED, sunk)

        choice = decide(node, sunk, rho)
        if choice.edge is None:
            steps.append(
                TraceStep(
                    node=node,
                    sunk_cost=sunk,
                    perceived_reward=rho,
                    planned_path=(node,),
                    action=StepAction.ABANDON,
                )
            )
            if node == graph.source and sunk == 0:
                return _close(instance, kind, steps, OutcomeKind.NEVER_STARTED, sunk)
            return _close(
                instance, kind, steps, OutcomeKind.ABANDONED, sunk, abandoned_at=node
            )

        steps.append(
            TraceStep(
                node=node,
                sunk_cost=sunk,
                perceived_reward=rho,
                planned_path=choice.planned_path,
                action=StepAction.MOVE,
                edge_id=choice.edge.id,
                perceived_cost=choice.perceived_cost,
            )
        )
        sunk += choice.edge.cost
        node = choice.edge.head


def _close(
    instance: Instance,
    kind: AgentKind,
    steps: List[TraceStep],
    outcome: OutcomeKind,
    total: Fraction,
    abandoned_at: Optional[str] = None,
) -> TraversalTrace:
    if outcome == OutcomeKind.REACHED:
        payoff = instance.reward - total
    elif outcome == OutcomeKind.ABANDONED:
        payoff = -total
    else:
        payoff = Fraction(0)
    return TraversalTrace(
        kind=kind,
        reward=instance.reward,
        params=instance.params,
        steps=tuple(steps),
        outcome=outcome,
        abandoned_at=abandoned_at,
        total_cost=total,
        payoff=payoff,
    )
