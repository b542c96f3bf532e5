"""
Biasplan Types - Pydantic models for biased planning on task graphs
"""

from .agent_kind import AgentKind
from .biasplan_base import BiasplanModel
from .graph import Edge, TaskGraph
from .instance import AgentParams, Instance
from .plan import DoublySophResult, PlanEntry, PlanTable, PolicyState, PolicyTable
from .rational import (
    INFINITY,
    Cost,
    Rational,
    format_cost,
    format_rational,
    is_infinite,
    parse_cost,
    parse_rational,
)
from .report import BoundCheck, GapReport
from .subset_sum import GadgetSequence, SubsetSumInstance
from .trace import (
    ABANDON,
    FINISH,
    OutcomeKind,
    StepAction,
    SwitchSummary,
    TraceStep,
    TraversalTrace,
)

__all__ = [
    "ABANDON",
    "AgentKind",
    "AgentParams",
    "BiasplanModel",
    "BoundCheck",
    "Cost",
    "DoublySophResult",
    "Edge",
    "FINISH",
    "GadgetSequence",
    "GapReport",
    "INFINITY",
    "Instance",
    "OutcomeKind",
    "PlanEntry",
    "PlanTable",
    "PolicyState",
    "PolicyTable",
    "Rational",
    "StepAction",
    "SubsetSumInstance",
    "SwitchSummary",
    "TaskGraph",
    "TraceStep",
    "TraversalTrace",
    "format_cost",
    "format_rational",
    "is_infinite",
    "parse_cost",
    "parse_rational",
]
