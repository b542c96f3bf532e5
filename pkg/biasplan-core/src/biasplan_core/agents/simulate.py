from fractions import Fraction
from itertools import pairwise
from typing import Dict

from biasplan_types import (
    AgentKind,
    Instance,
    OutcomeKind,
    SwitchSummary,
    TraversalTrace,
)

from .registry import AGENT_REGISTRY


def simulate(instance: Instance, kind: AgentKind) -> TraversalTrace:
    """Walk the instance's graph as an agent of the given kind."""
    agent_class = AGENT_REGISTRY.get_agent_class(AgentKind.from_name(kind))
    return agent_class(instance).run()


def simulate_all(instance: Instance) -> Dict[AgentKind, TraversalTrace]:
    return {kind: simulate(instance, kind) for kind in AgentKind}


def count_switches(trace: TraversalTrace) -> SwitchSummary:
    """
    Steps whose planned path is not the tail of the previous step's plan,
    and the cost paid between consecutive switch points.
    """
    switch_nodes = []
    boundaries = [Fraction(0)]
    for previous, step in pairwise(trace.steps):
        if step.planned_path != previous.planned_path[1:]:
            switch_nodes.append(step.node)
            boundaries.append(step.sunk_cost)
    boundaries.append(trace.total_cost)
    return SwitchSummary(
        switch_nodes=tuple(switch_nodes),
        segment_costs=tuple(end - start for start, end in pairwise(boundaries)),
    )


def payoff_of(trace: TraversalTrace, reward: Fraction) -> Fraction:
    if trace.outcome == OutcomeKind.REACHED:
        return reward - trace.total_cost
    if trace.outcome == OutcomeKind.ABANDONED:
        return -trace.total_cost
    return Fraction(0)
