"""
biasplan core: task graph algorithms, biased agents, planners, instance
generators, bound analysis and the `biasplan` command line.
"""

from .agents import count_switches, simulate, simulate_all
from .planners import dp_integer, min_reward, recursive_states

__all__ = [
    "count_switches",
    "dp_integer",
    "min_reward",
    "recursive_states",
    "simulate",
    "simulate_all",
]
