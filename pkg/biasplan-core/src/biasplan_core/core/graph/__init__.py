"""
Task graph algorithms.

This module provides:
- Validation of the task-graph invariants
- Stable topological ordering and the shared edge preference order
- Exact shortest paths to the target
"""

from .ordering import preference_key, to_networkx, topological_order
from .paths import (
    Distances,
    bellman_violations,
    path_nodes,
    shortest_path,
    shortest_path_costs,
)
from .validation import collect_violations, is_valid, validate

__all__ = [
    # Ordering
    "preference_key",
    "to_networkx",
    "topological_order",
    # Paths
    "Distances",
    "bellman_violations",
    "path_nodes",
    "shortest_path",
    "shortest_path_costs",
    # Validation
    "collect_violations",
    "is_valid",
    "validate",
]
