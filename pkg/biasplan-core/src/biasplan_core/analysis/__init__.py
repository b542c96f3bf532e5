"""
Bounds, closed forms and ground-truth oracles that simulated behaviour is
checked against.
"""

from .bounds import (
    fan_cost_closed_form,
    fan_growth_ratio,
    fan_sum_x,
    gap_doubly_soph_vs_optimal,
    gap_report,
    gap_soph_kinds,
    optimal_cost,
    reward_at_bound_checks,
    singly_gap_bound,
    singly_switch_checks,
    singly_total_sunk,
)
from .report import format_comparison, format_gap_table, gap_records
from .subset_sum import find_subset, subset_sum_oracle, witness_values

__all__ = [
    "fan_cost_closed_form",
    "fan_growth_ratio",
    "fan_sum_x",
    "find_subset",
    "format_comparison",
    "format_gap_table",
    "gap_doubly_soph_vs_optimal",
    "gap_records",
    "gap_report",
    "gap_soph_kinds",
    "optimal_cost",
    "reward_at_bound_checks",
    "singly_gap_bound",
    "singly_switch_checks",
    "singly_total_sunk",
    "subset_sum_oracle",
    "witness_values",
]
