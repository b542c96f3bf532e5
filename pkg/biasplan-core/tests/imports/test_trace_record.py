import json
import re

import pytest

from biasplan_core.agents import simulate, simulate_all
from biasplan_core.core.errors import TraceParseError
from biasplan_core.imports import (
    format_trace_json,
    format_trace_record,
    format_trace_text,
    parse_trace_record,
)
from biasplan_types import AgentKind

GYM_DOUBLY_NAIVE = """\
kind doubly-naive
reward 19
bias 2
sunk 1/2
step node=s sunk=0 perceived_reward=19 decision=e0 perceived_cost=14 plan=s,v,t
step node=v sunk=1 perceived_reward=39/2 decision=ABANDON plan=v
outcome AbandonedAt(v)
total_cost 1
payoff -1
"""


def test_record_format(gym):
    trace = simulate(gym, AgentKind.DOUBLY_NAIVE)
    assert format_trace_record(trace) == GYM_DOUBLY_NAIVE


def test_record_is_parsed_back(gym, deadline):
    for instance in (gym, deadline):
        for trace in simulate_all(instance).values():
            assert parse_trace_record(format_trace_record(trace)) == trace


@pytest.mark.parametrize(
    "text, message",
    [
        (GYM_DOUBLY_NAIVE.replace("payoff -1\n", ""), "record is missing payoff"),
        (GYM_DOUBLY_NAIVE + "colour red\n", "line 10: unknown record key 'colour'"),
        (
            GYM_DOUBLY_NAIVE.replace(" plan=v\n", "\n"),
            "line 6: step is missing plan",
        ),
        (
            GYM_DOUBLY_NAIVE.replace("sunk=1 ", "sunk=one "),
            "line 6",
        ),
        (
            GYM_DOUBLY_NAIVE.replace("AbandonedAt(v)", "Lost"),
            "unknown outcome 'Lost'",
        ),
        (GYM_DOUBLY_NAIVE.replace("decision=ABANDON", "ABANDON"), "not key=value"),
    ],
)
def test_malformed_records(text, message):
    with pytest.raises(TraceParseError, match=re.escape(message)):
        parse_trace_record(text)


def test_text_view(gym):
    lines = format_trace_text(simulate(gym, AgentKind.DOUBLY_NAIVE)).splitlines()
    assert lines[0] == "agent doubly-naive b=2 lambda=1/2 R=19"
    assert lines[1].split() == [
        "s", "sunk", "0", "reward", "19", "e0", "perceived", "14", "plan", "s->v->t",
    ]
    assert lines[-1] == "outcome AbandonedAt(v), total_cost 1, payoff -1"


def test_json_view(gym):
    data = json.loads(format_trace_json(simulate(gym, AgentKind.DOUBLY_SOPHISTICATED)))
    assert data["kind"] == "doubly-sophisticated"
    assert data["payoff"] == "5"
    assert [step["node"] for step in data["steps"]] == ["s", "w", "t"]
