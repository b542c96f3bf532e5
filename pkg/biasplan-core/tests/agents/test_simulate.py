from fractions import Fraction

import pytest

from biasplan_core.agents import (
    AGENT_REGISTRY,
    count_switches,
    payoff_of,
    perceived_reward,
    simulate,
    simulate_all,
)
from biasplan_core.generators import singly_exponential_instance
from biasplan_types import AgentKind, OutcomeKind, StepAction

F = Fraction


def test_every_kind_is_registered():
    assert {entry["name"] for entry in AGENT_REGISTRY.list()} == {
        kind.value for kind in AgentKind
    }
    assert all(AGENT_REGISTRY.agent_exists(kind) for kind in AgentKind)


def test_perceived_reward():
    assert perceived_reward(F(19), F(1, 2), F(1)) == F(39, 2)


class TestGym:
    def test_optimal(self, gym):
        trace = simulate(gym, AgentKind.OPTIMAL)
        assert trace.path == ("s", "v", "t")
        assert trace.payoff == 6

    def test_optimal_does_not_start_below_the_optimal_cost(self, gym):
        trace = simulate(gym.with_reward(10), AgentKind.OPTIMAL)
        assert trace.outcome == OutcomeKind.NEVER_STARTED
        assert trace.payoff == 0

    def test_doubly_naive_abandons_at_v(self, gym):
        trace = simulate(gym, AgentKind.DOUBLY_NAIVE)
        assert trace.outcome_label == "AbandonedAt(v)"
        assert trace.total_cost == 1
        assert trace.payoff == -1
        first, last = trace.steps
        assert first.perceived_cost == 14
        assert first.planned_path == ("s", "v", "t")
        assert last.perceived_reward == F(39, 2)
        assert last.action == StepAction.ABANDON

    def test_naive_present_biased_abandons_at_v(self, gym):
        assert simulate(gym, AgentKind.NAIVE_PRESENT_BIASED).abandoned_at == "v"

    @pytest.mark.parametrize(
        "kind", [AgentKind.SOPHISTICATED_PRESENT_BIASED, AgentKind.SINGLY_SOPHISTICATED]
    )
    def test_sophisticated_kinds_never_start(self, gym, kind):
        trace = simulate(gym, kind)
        assert trace.outcome_label == "NeverStarted"
        assert trace.payoff == 0

    def test_doubly_sophisticated_takes_the_deluxe_route(self, gym):
        trace = simulate(gym, AgentKind.DOUBLY_SOPHISTICATED)
        assert trace.path == ("s", "w", "t")
        assert trace.total_cost == 14
        assert trace.payoff == 5

    def test_payoff_of_matches_stored_payoff(self, gym):
        for trace in simulate_all(gym).values():
            assert payoff_of(trace, gym.reward) == trace.payoff


class TestDeadline:
    def test_sophisticated_does_one_project_a_week(self, deadline):
        trace = simulate(deadline, AgentKind.SOPHISTICATED_PRESENT_BIASED)
        assert trace.path == ("s", "v_1_0", "v_2_1", "v_3_2", "t")
        assert trace.total_cost == 12
        assert trace.payoff == F(11, 2)

    def test_doubly_naive_defers_to_the_last_week(self, deadline):
        trace = simulate(deadline, AgentKind.DOUBLY_NAIVE)
        assert trace.path == ("s", "v_1_0", "v_2_1", "v_3_1", "t")
        assert trace.total_cost == 14

    def test_naive_present_biased_drops_out_in_the_last_week(self, deadline):
        trace = simulate(deadline, AgentKind.NAIVE_PRESENT_BIASED)
        assert trace.abandoned_at == "v_3_1"
        assert trace.total_cost == 4

    def test_doubly_sophisticated_does_not_start(self, deadline):
        assert not simulate(deadline, AgentKind.DOUBLY_SOPHISTICATED).started

    def test_singly_sophisticated_switches_once(self, deadline):
        trace = simulate(deadline, AgentKind.SINGLY_SOPHISTICATED)
        assert trace.reached
        assert trace.total_cost == 14
        summary = count_switches(trace)
        assert summary.switch_nodes == ("v_2_1",)
        assert summary.segment_costs == (F(4), F(10))


class TestSingAbandons:
    def test_singly_sophisticated_abandons_at_u(self, sing_abandons):
        trace = simulate(sing_abandons, AgentKind.SINGLY_SOPHISTICATED)
        assert trace.outcome_label == "AbandonedAt(u)"
        assert trace.total_cost == 2

    def test_sophisticated_present_biased_finishes(self, sing_abandons):
        trace = simulate(sing_abandons, AgentKind.SOPHISTICATED_PRESENT_BIASED)
        assert trace.path == ("s", "u", "v", "t")
        assert trace.payoff == 2


def test_zero_cost_single_edge_always_pays_the_reward(build_instance):
    instance = build_instance([("s", "t", 0)], reward=7, b=3, lam=1)
    for kind, trace in simulate_all(instance).items():
        assert trace.reached, kind
        assert trace.payoff == 7


def test_simulate_accepts_kind_names(gym):
    assert simulate(gym, "doubly-naive").kind == AgentKind.DOUBLY_NAIVE


def test_runs_are_logged(gym, logger_history):
    simulate(gym, AgentKind.OPTIMAL)
    events = logger_history.history("gym")
    assert events[-1].content["agent"] == "optimal"
    assert events[-1].content["outcome"] == "Reached"


def test_switches_on_the_singly_exponential_family():
    n = 4
    instance = singly_exponential_instance(n, 3, F(1, 2), 10)
    trace = simulate(instance, AgentKind.SINGLY_SOPHISTICATED)
    assert trace.path == ("s",) + tuple(f"v{i}" for i in range(1, n + 1))
    summary = count_switches(trace)
    assert summary.switch_nodes == tuple(f"v{i}" for i in range(1, n + 1))
    assert summary.total == trace.total_cost


def test_trace_without_switches(gym):
    summary = count_switches(simulate(gym, AgentKind.OPTIMAL))
    assert summary.count == 0
    assert summary.segment_costs == (F(13),)
