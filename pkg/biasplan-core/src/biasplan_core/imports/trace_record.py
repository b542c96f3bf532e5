"""
Trace renderings.

`record` is a line-oriented key-value schema, one step per line:

    kind doubly-naive
    reward 19
    bias 2
    sunk 1/2
    step node=s sunk=0 perceived_reward=19 decision=e0 perceived_cost=14 plan=s,v,t
    step node=v sunk=1 perceived_reward=39/2 decision=ABANDON plan=v
    outcome AbandonedAt(v)
    total_cost 1
    payoff -1

`parse_trace_record` inverts it exactly. `text` is the aligned human view
and `json` mirrors the TraversalTrace fields.
"""

import re
from typing import Dict, List

from biasplan_types import (
    ABANDON,
    FINISH,
    AgentKind,
    AgentParams,
    OutcomeKind,
    StepAction,
    TraceStep,
    TraversalTrace,
    format_rational,
    parse_rational,
)

from ..core.errors import TraceParseError

_ABANDONED = re.compile(r"^AbandonedAt\((?P<node>[^()]+)\)$")
_STEP_FIELDS = ("node", "sunk", "perceived_reward", "decision", "plan")


def format_trace_record(trace: TraversalTrace) -> str:
    lines = [
        f"kind {trace.kind.value}",
        f"reward {format_rational(trace.reward)}",
        f"bias {format_rational(trace.params.b)}",
        f"sunk {format_rational(trace.params.lam)}",
    ]
    for step in trace.steps:
        fields = [
            f"node={step.node}",
            f"sunk={format_rational(step.sunk_cost)}",
            f"perceived_reward={format_rational(step.perceived_reward)}",
            f"decision={step.decision}",
        ]
        if step.perceived_cost is not None:
            fields.append(f"perceived_cost={format_rational(step.perceived_cost)}")
        fields.append("plan=" + ",".join(step.planned_path))
        lines.append("step " + " ".join(fields))
    lines.extend(
        [
            f"outcome {trace.outcome_label}",
            f"total_cost {format_rational(trace.total_cost)}",
            f"payoff {format_rational(trace.payoff)}",
        ]
    )
    return "\n".join(lines) + "\n"


def _parse_step(payload: str, line: int) -> TraceStep:
    fields: Dict[str, str] = {}
    for token in payload.split():
        key, separator, value = token.partition("=")
        if not separator:
            raise TraceParseError(f"step field '{token}' is not key=value", line)
        fields[key] = value
    missing = [name for name in _STEP_FIELDS if name not in fields]
    if missing:
        raise TraceParseError(f"step is missing {', '.join(missing)}", line)

    decision = fields["decision"]
    if decision == ABANDON:
        action, edge_id = StepAction.ABANDON, None
    elif decision == FINISH:
        action, edge_id = StepAction.FINISH, None
    else:
        action, edge_id = StepAction.MOVE, decision
    try:
        return TraceStep(
            node=fields["node"],
            sunk_cost=parse_rational(fields["sunk"]),
            perceived_reward=parse_rational(fields["perceived_reward"]),
            planned_path=tuple(fields["plan"].split(",")),
            action=action,
            edge_id=edge_id,
            perceived_cost=(
                parse_rational(fields["perceived_cost"])
                if "perceived_cost" in fields
                else None
            ),
        )
    except ValueError as e:
        raise TraceParseError(str(e), line)


def parse_trace_record(text: str) -> TraversalTrace:
    header: Dict[str, str] = {}
    steps: List[TraceStep] = []
    for line, raw in enumerate(text.splitlines(), start=1):
        raw = raw.strip()
        if not raw:
            continue
        key, _, value = raw.partition(" ")
        if key == "step":
            steps.append(_parse_step(value, line))
        elif key in ("kind", "reward", "bias", "sunk", "outcome", "total_cost", "payoff"):
            header[key] = value.strip()
        else:
            raise TraceParseError(f"unknown record key '{key}'", line)

    missing = [
        key
        for key in ("kind", "reward", "bias", "sunk", "outcome", "total_cost", "payoff")
        if key not in header
    ]
    if missing:
        raise TraceParseError(f"record is missing {', '.join(missing)}")

    abandoned_at = None
    label = header["outcome"]
    if label == "Reached":
        outcome = OutcomeKind.REACHED
    elif label == "NeverStarted":
        outcome = OutcomeKind.NEVER_STARTED
    elif match := _ABANDONED.match(label):
        outcome, abandoned_at = OutcomeKind.ABANDONED, match.group("node")
    else:
        raise TraceParseError(f"unknown outcome '{label}'")

    try:
        return TraversalTrace(
            kind=AgentKind.from_name(header["kind"]),
            reward=parse_rational(header["reward"]),
            params=AgentParams(
                b=parse_rational(header["bias"]), lam=parse_rational(header["sunk"])
            ),
            steps=tuple(steps),
            outcome=outcome,
            abandoned_at=abandoned_at,
            total_cost=parse_rational(header["total_cost"]),
            payoff=parse_rational(header["payoff"]),
        )
    except (KeyError, ValueError) as e:
        raise TraceParseError(str(e))


def format_trace_text(trace: TraversalTrace) -> str:
    rows = [
        (
            step.node,
            f"sunk {format_rational(step.sunk_cost)}",
            f"reward {format_rational(step.perceived_reward)}",
            step.decision,
            (
                f"perceived {format_rational(step.perceived_cost)}"
                if step.perceived_cost is not None
                else ""
            ),
            "plan " + "->".join(step.planned_path),
        )
        for step in trace.steps
    ]
    widths = [max((len(row[column]) for row in rows), default=0) for column in range(6)]
    lines = [
        f"agent {trace.kind.value} b={format_rational(trace.params.b)} "
        f"lambda={format_rational(trace.params.lam)} R={format_rational(trace.reward)}"
    ]
    for row in rows:
        lines.append(
            "  " + "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        )
    lines.append(
        f"outcome {trace.outcome_label}, total_cost {format_rational(trace.total_cost)}, "
        f"payoff {format_rational(trace.payoff)}"
    )
    return "\n".join(lines) + "\n"


def format_trace_json(trace: TraversalTrace) -> str:
    return trace.model_dump_json(indent=2) + "\n"
