import math
from fractions import Fraction

import pytest

from biasplan_core.core.errors import DenominatorBoundError, NonIntegerCostError
from biasplan_core.core.graph import shortest_path_costs
from biasplan_core.generators import (
    doubly_vs_soph_fixture,
    random_instance,
    sing_better_fixture,
)
from biasplan_core.planners import (
    brute_force,
    check_policy_table,
    dp_integer,
    doubly_soph,
    dump_policy,
    min_reward,
    policy_path,
    recursive_states,
)
from biasplan_types import AgentParams, INFINITY, Instance, PolicyState, PolicyTable

F = Fraction
PLANNERS = [dp_integer, recursive_states, brute_force]


@pytest.mark.parametrize("planner", PLANNERS)
def test_gym_goes_through_w(gym, planner):
    result = planner(gym)
    assert result.started
    assert result.trace.path == ("s", "w", "t")
    assert result.trace.total_cost == 14
    assert result.trace.payoff == 5


@pytest.mark.parametrize("planner", PLANNERS)
def test_gym_policy_abandons_v(gym, planner):
    state = planner(gym).policy.get("v", F(1))
    assert state.abandoned
    assert state.continuation == INFINITY


def test_planners_agree_on_deadline(deadline):
    full = dp_integer(deadline)
    reachable = recursive_states(deadline)
    assert full.trace == reachable.trace
    for state in reachable.policy.states:
        assert full.policy.get(state.node, state.sunk_cost) == state


def test_dp_table_covers_every_sunk_cost(gym):
    # four nodes, sunk costs 0..27
    assert len(dp_integer(gym).policy) == 4 * 28


def test_dp_rejects_fractional_costs():
    with pytest.raises(NonIntegerCostError, match="fractional"):
        dp_integer(sing_better_fixture(2, F(1, 2), F(1, 100)))


def test_recursive_handles_fractional_costs():
    result = recursive_states(sing_better_fixture(2, F(1, 2), F(1, 100)))
    assert result.trace.path == ("s", "v1", "t")
    assert result.trace.total_cost == F(201, 100)


def test_planner_logs_a_summary(gym, logger_history):
    recursive_states(gym)
    event = logger_history.history("gym")[-1]
    assert event.content["planner"] == "recursive_states"
    assert event.content["started"] is True


def test_policy_path_follows_the_table(gym):
    result = recursive_states(gym)
    assert policy_path(gym.graph, result.policy, "s", F(0)) == ("s", "w", "t")
    assert policy_path(gym.graph, result.policy, "v", F(1)) == ("v",)


def starts(graph, b, lam, reward):
    return recursive_states(
        Instance(graph=graph, reward=reward, params=AgentParams(b=b, lam=lam))
    ).started


def previous_representable(value, bound):
    return max(F(math.ceil(value * q) - 1, q) for q in range(1, bound + 1))


class TestMinReward:
    def test_gym(self, gym):
        assert min_reward(gym.graph, 2, F(1, 2)) == 18

    def test_single_edge_needs_b_times_cost(self, build_instance):
        instance = build_instance([("s", "t", 3)], reward=0)
        assert min_reward(instance.graph, 2, F(1, 2)) == 6

    def test_never_exceeds_b_times_optimal_cost(self, deadline):
        assert min_reward(deadline.graph, 2, F(3, 4)) <= 24

    @pytest.mark.parametrize("bound", [3, 4, 64])
    def test_finds_rewards_off_the_unit_fraction_grid(self, bound):
        graph = doubly_vs_soph_fixture(2, F(1, 2), F(2, 3)).graph
        assert min_reward(graph, 2, F(1, 2), bound) == F(11, 3)

    def test_nothing_smaller_starts(self):
        graph = doubly_vs_soph_fixture(2, F(1, 2), F(2, 3)).graph
        smaller = {F(p, q) for q in range(1, 5) for p in range(0, 4 * q)}
        assert not any(
            starts(graph, 2, F(1, 2), reward) for reward in smaller if reward < F(11, 3)
        )

    def test_rounds_up_to_the_bound(self):
        # threshold 11/3 has no representation with denominator 2
        graph = doubly_vs_soph_fixture(2, F(1, 2), F(2, 3)).graph
        assert min_reward(graph, 2, F(1, 2), 2) == 4

    @pytest.mark.parametrize("seed", range(25))
    def test_boundary_pair_on_random_instances(self, seed):
        instance = random_instance(2 + seed % 6, 6, F(1, 2), seed)
        b, lam = instance.params.b, instance.params.lam
        reward = min_reward(instance.graph, b, lam, 8)
        assert reward.denominator <= 8 or reward == b * shortest_path_costs(instance.graph)["s"]
        assert starts(instance.graph, b, lam, reward)
        previous = previous_representable(reward, 8)
        if previous >= 0:
            assert not starts(instance.graph, b, lam, previous)

    def test_scan_replaces_a_wrong_search_result(self, gym, monkeypatch, logger_history):
        monkeypatch.setattr(doubly_soph, "_search", lambda *args: args[-1])
        assert min_reward(gym.graph, 2, F(1, 2)) == 18
        [event] = logger_history.history("min_reward")
        assert event.content["result"] == "26"

    def test_scan_recovers_from_a_result_that_does_not_start(self, monkeypatch):
        graph = doubly_vs_soph_fixture(2, F(1, 2), F(2, 3)).graph
        monkeypatch.setattr(doubly_soph, "_search", lambda *args: F(0))
        assert min_reward(graph, 2, F(1, 2), 4) == F(11, 3)

    def test_rejects_non_positive_bound(self, gym):
        with pytest.raises(DenominatorBoundError, match="must be positive"):
            min_reward(gym.graph, 2, F(1, 2), denominator_bound=0)


class TestPolicyTable:
    def test_planner_output_is_consistent(self, deadline):
        result = dp_integer(deadline)
        assert check_policy_table(deadline.graph, result.policy) == []

    def test_tampered_state_is_reported(self, gym):
        policy = recursive_states(gym).policy
        tampered = PolicyTable(
            reward=policy.reward,
            b=policy.b,
            lam=policy.lam,
            states=tuple(
                PolicyState(node="w", sunk_cost=F(4), continuation=INFINITY)
                if state.key == ("w", F(4))
                else state
                for state in policy.states
            ),
        )
        problems = check_policy_table(gym.graph, tampered)
        assert "(w, 4): decision ABANDON, expected e3" in problems
        assert any(problem.startswith("(s, 0)") for problem in problems)

    def test_dump(self, gym):
        assert dump_policy(gym.graph, recursive_states(gym).policy) == (
            "s 0 e2 14\n"
            "v 1 ABANDON inf\n"
            "w 4 e3 10\n"
            "t 13 FINISH 0\n"
            "t 14 FINISH 0\n"
        )
