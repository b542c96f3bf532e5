"""
Agent registration by decorator.

Every Agent subclass decorated with @biased_agent is stored in AGENT_REGISTRY
under its AgentKind, which is how `simulate` finds the implementation of a
kind.
"""

from typing import Dict, List, Type, TypeVar

from biasplan_types import AgentKind

from .base import Agent

A = TypeVar("A", bound=Agent)


class AgentRegistry:
    """Mapping AgentKind -> agent class."""

    def __init__(self):
        self._agents: Dict[AgentKind, Type[Agent]] = {}

    def register(self, agent_class: Type[A]) -> Type[A]:
        self._agents[agent_class.kind] = agent_class
        return agent_class

    def agent_exists(self, kind: AgentKind) -> bool:
        return kind in self._agents

    def get_agent_class(self, kind: AgentKind) -> Type[Agent]:
        if kind not in self._agents:
            raise KeyError(f"Agent '{kind.value}' not found")
        return self._agents[kind]

    def list(self) -> List[Dict[str, str]]:
        return sorted(
            [
                {
                    "name": agent.name(),
                    "class_name": agent.__name__,
                    "description": (agent.__doc__ or "").strip().splitlines()[0],
                }
                for agent in self._agents.values()
            ],
            key=lambda item: item["name"],
        )


AGENT_REGISTRY = AgentRegistry()


def biased_agent(cls: Type[A]) -> Type[A]:
    """Register an Agent subclass in AGENT_REGISTRY under its kind."""
    return AGENT_REGISTRY.register(cls)
