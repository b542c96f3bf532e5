"""Pytest configuration for biasplan-core tests."""
import pytest

from biasplan_core.core.logger import Logger
from biasplan_core.generators import (
    deadline_fixture,
    gym_fixture,
    sing_abandons_fixture,
)
from biasplan_types import AgentParams, Edge, Instance, TaskGraph


@pytest.fixture(autouse=True)
def logger_history():
    """Start every test with an empty event history and hand it to the test."""
    Logger.clear()
    yield Logger
    Logger.clear()


@pytest.fixture
def gym():
    return gym_fixture()


@pytest.fixture
def deadline():
    return deadline_fixture()


@pytest.fixture
def sing_abandons():
    return sing_abandons_fixture()


def make_instance(edges, reward, b=1, lam=0, source="s", target="t", nodes=None):
    """Instance from (tail, head, cost) triples; nodes in first-seen order."""
    if nodes is None:
        nodes = []
        for tail, head, _ in edges:
            for node in (tail, head):
                if node not in nodes:
                    nodes.append(node)
        for node in (source, target):
            if node not in nodes:
                nodes.append(node)
    return Instance(
        graph=TaskGraph(
            nodes=tuple(nodes),
            edges=tuple(
                Edge(id=f"e{k}", tail=tail, head=head, cost=cost)
                for k, (tail, head, cost) in enumerate(edges)
            ),
            source=source,
            target=target,
        ),
        reward=reward,
        params=AgentParams(b=b, lam=lam),
        declared=("bias", "sunk"),
    )


@pytest.fixture
def build_instance():
    return make_instance
