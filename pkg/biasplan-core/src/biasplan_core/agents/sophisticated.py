from fractions import Fraction
from typing import Dict, Optional, Tuple

from biasplan_types import INFINITY, AgentKind, Edge, PlanEntry, PlanTable, TaskGraph

from ..core.graph import preference_key, topological_order
from ..core.traversal import Choice, abandon
from .base import Agent
from .registry import biased_agent


def sophisticated_plan(graph: TaskGraph, b: Fraction, rho: Fraction) -> PlanTable:
    """
    Plan of a (b, 0)-sophisticated agent whose every future self faces `rho`.

    Nodes are settled in reverse topological order. A node keeps the best
    edge into a non-Abandon node and is Abandon when there is none or when
    that edge's perceived cost exceeds `rho`.
    """
    entries: Dict[str, PlanEntry] = {}
    for node in reversed(topological_order(graph)):
        if node == graph.target:
            entries[node] = PlanEntry(node=node, continuation=Fraction(0))
            continue
        best: Optional[Tuple[tuple, Edge, PlanEntry]] = None
        for position, edge in graph.out_edges(node):
            successor = entries[edge.head]
            if successor.abandoned:
                continue
            key = preference_key(b * edge.cost + successor.continuation, edge, position)
            if best is None or key < best[0]:
                best = (key, edge, successor)
        if best is None or best[0][0] > rho:
            entries[node] = PlanEntry(node=node, continuation=INFINITY)
        else:
            _, edge, successor = best
            entries[node] = PlanEntry(
                node=node,
                edge_id=edge.id,
                continuation=edge.cost + successor.continuation,
            )
    return PlanTable(rho=rho, b=b, entries=entries)


def planned_path(graph: TaskGraph, plan: PlanTable, node: str) -> Tuple[str, ...]:
    """Nodes the plan visits from `node`; just `node` when it is Abandon."""
    path = [node]
    while not plan.is_abandon(node) and node != graph.target:
        node = graph.edge(plan.entry(node).edge_id).head
        path.append(node)
    return tuple(path)


def plan_choice(graph: TaskGraph, plan: PlanTable, node: str) -> Choice:
    entry = plan.entry(node)
    if entry.abandoned:
        return abandon(node)
    edge = graph.edge(entry.edge_id)
    return Choice(
        edge=edge,
        planned_path=planned_path(graph, plan, node),
        perceived_cost=plan.b * edge.cost + plan.entry(edge.head).continuation,
    )


@biased_agent
class SophisticatedPresentBiasedAgent(Agent):
    """Present-biased agent that foresees its bias; commits to one plan at the source."""

    kind = AgentKind.SOPHISTICATED_PRESENT_BIASED

    def __init__(self, instance):
        super().__init__(instance)
        self.plan = sophisticated_plan(self.graph, self.b, instance.reward)

    def decide(self, node: str, sunk: Fraction, rho: Fraction) -> Choice:
        return plan_choice(self.graph, self.plan, node)
