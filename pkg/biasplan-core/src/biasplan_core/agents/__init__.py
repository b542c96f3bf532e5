"""
Agents walking task graphs under present bias and sunk-cost bias.

Importing this package registers every agent kind in AGENT_REGISTRY.
"""

from ..core.traversal import Choice, perceived_reward
from .base import Agent
from .doubly import DoublySophisticatedAgent
from .mixed import NaivePresentSophSunkAgent, SinglySophisticatedAgent
from .naive import DoublyNaiveAgent, NaivePresentBiasedAgent, naive_choice
from .optimal import OptimalAgent
from .registry import AGENT_REGISTRY, biased_agent
from .simulate import count_switches, payoff_of, simulate, simulate_all
from .sophisticated import (
    SophisticatedPresentBiasedAgent,
    plan_choice,
    planned_path,
    sophisticated_plan,
)

__all__ = [
    "AGENT_REGISTRY",
    "Agent",
    "Choice",
    "DoublyNaiveAgent",
    "DoublySophisticatedAgent",
    "NaivePresentBiasedAgent",
    "NaivePresentSophSunkAgent",
    "OptimalAgent",
    "SinglySophisticatedAgent",
    "SophisticatedPresentBiasedAgent",
    "biased_agent",
    "count_switches",
    "naive_choice",
    "payoff_of",
    "perceived_reward",
    "plan_choice",
    "planned_path",
    "simulate",
    "simulate_all",
    "sophisticated_plan",
]
