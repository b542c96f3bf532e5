"""Pytest configuration for biasplan-types tests."""
import pytest

from biasplan_types import Edge, TaskGraph


@pytest.fixture
def gym_graph() -> TaskGraph:
    return TaskGraph(
        nodes=("s", "v", "w", "t"),
        edges=(
            Edge(id="e0", tail="s", head="v", cost=1),
            Edge(id="e1", tail="v", head="t", cost=12),
            Edge(id="e2", tail="s", head="w", cost=4),
            Edge(id="e3", tail="w", head="t", cost=10),
        ),
        source="s",
        target="t",
    )
