from collections import Counter
from typing import List

import networkx as nx
from biasplan_types import TaskGraph

from ..errors import GraphValidationError
from .ordering import to_networkx


def collect_violations(graph: TaskGraph) -> List[str]:
    """Every violated task-graph invariant, in a stable order."""
    errors: List[str] = []
    known = set(graph.nodes)

    for node, count in Counter(graph.nodes).items():
        if count > 1:
            errors.append(f"duplicate node id '{node}'")
    for edge_id, count in Counter(edge.id for edge in graph.edges).items():
        if count > 1:
            errors.append(f"duplicate edge id '{edge_id}'")
    for role, node in (("source", graph.source), ("target", graph.target)):
        if node not in known:
            errors.append(f"{role} '{node}' is not a declared node")

    structural = True
    for edge in graph.edges:
        if edge.cost < 0:
            errors.append(f"negative cost {edge.cost} on edge '{edge.id}'")
        for end in (edge.tail, edge.head):
            if end not in known:
                errors.append(f"edge '{edge.id}' references unknown node '{end}'")
                structural = False

    if not structural:
        return errors

    view = to_networkx(graph)
    try:
        cycle = nx.find_cycle(view)
        errors.append(
            "cycle detected: " + " -> ".join([cycle[0][0]] + [step[1] for step in cycle])
        )
    except nx.NetworkXNoCycle:
        pass

    if graph.source in known and graph.target in known:
        if not nx.has_path(view, graph.source, graph.target):
            errors.append(
                f"unreachable target: no path from '{graph.source}' to '{graph.target}'"
            )
    return errors


def validate(graph: TaskGraph) -> None:
    """Raise GraphValidationError listing every violated invariant."""
    errors = collect_violations(graph)
    if errors:
        raise GraphValidationError(errors)


def is_valid(graph: TaskGraph) -> bool:
    return not collect_violations(graph)
