from fractions import Fraction

import pytest

from biasplan_core.agents import simulate
from biasplan_core.analysis import (
    fan_cost_closed_form,
    fan_growth_ratio,
    fan_sum_x,
    gap_report,
    optimal_cost,
    singly_gap_bound,
    singly_switch_checks,
    singly_total_sunk,
)
from biasplan_core.generators import fan_instance, fan_ratio, singly_exponential_instance
from biasplan_types import AgentKind

F = Fraction


class TestGapReport:
    def test_gym(self, gym):
        report = gap_report(gym)
        assert report.optimal_cost == 13
        assert report.payoffs[AgentKind.OPTIMAL] == 6
        assert report.payoffs[AgentKind.DOUBLY_SOPHISTICATED] == 5
        first = report.checks[0]
        assert (first.observed, first.bound) == (1, 13)
        assert report.all_hold
        assert report.violations == ()

    def test_min_reward_check_on_gym(self, gym):
        checks = {check.name: check for check in gap_report(gym).checks}
        assert checks["min_reward"].observed == 18
        assert checks["doubly-soph cost at R = b*C_o"].observed == 13

    def test_without_reward_bound(self, deadline):
        report = gap_report(deadline, with_reward_bound=False)
        assert [check.name for check in report.checks] == [
            "optimal - doubly-soph",
            "|doubly-soph - soph-present|",
            "singly-soph - doubly-soph",
        ]

    def test_optimal_cost(self, deadline):
        assert optimal_cost(deadline) == 12


class TestSinglyBound:
    def test_no_switch_is_the_reward(self):
        assert singly_gap_bound(0, F(1, 2), 7) == 7

    def test_two_switches(self):
        assert singly_gap_bound(2, 1, 1) == 4

    @pytest.mark.parametrize("k, lam", [(1, 0), (-1, F(1, 2))])
    def test_rejects(self, k, lam):
        with pytest.raises(ValueError):
            singly_gap_bound(k, lam, 1)

    def test_deadline_segments(self, deadline):
        checks = singly_switch_checks(deadline)
        assert all(check.holds for check in checks)
        gap = checks[-1]
        assert gap.name == "optimal - singly-soph"
        assert gap.observed == 2
        assert gap.bound == singly_gap_bound(2, F(3, 4), F(35, 2))

    @pytest.mark.parametrize("n", [1, 3, 6])
    def test_exponential_family(self, n):
        instance = singly_exponential_instance(n, 3, F(1, 2), 10)
        trace = simulate(instance, AgentKind.SINGLY_SOPHISTICATED)
        assert trace.abandoned_at == f"v{n}"
        assert trace.total_cost == singly_total_sunk(n, 3, F(1, 2), 10)
        assert all(check.holds for check in singly_switch_checks(instance, trace))

    def test_optimal_payoff_on_the_exponential_family(self):
        instance = singly_exponential_instance(3, 3, F(1, 2), 10)
        optimal = simulate(instance, AgentKind.OPTIMAL)
        assert optimal.path == ("s", "v1", "u1", "t1", "t")
        assert optimal.payoff == F(13, 3) - F(1, 100)
        assert optimal.payoff <= 10 * (1 - F(1, 5) - F(1, 3))


class TestFanClosedForm:
    def test_no_stage_costs_y0(self):
        assert fan_cost_closed_form(0, 2, F(1, 2), y0=3) == 3

    def test_one_stage(self):
        assert fan_cost_closed_form(1, 2, F(1, 2)) == F(14, 9)

    def test_sum_x(self):
        assert fan_sum_x(1, 2, F(1, 2)) == F(4, 9)
        assert fan_sum_x(0, 2, F(1, 2)) == 0

    @pytest.mark.parametrize("b, lam", [(2, F(1, 2)), (3, 1), (F(3, 2), F(1, 4))])
    def test_growth_ratio_is_stage_ratio(self, b, lam):
        assert fan_growth_ratio(b, lam) == fan_ratio(F(b), F(lam))

    def test_doubly_naive_pays_the_closed_form(self):
        instance = fan_instance(20, 2, F(1, 2))
        trace = simulate(instance, AgentKind.DOUBLY_NAIVE)
        assert trace.reached
        assert trace.total_cost == fan_cost_closed_form(20, 2, F(1, 2))
        assert trace.total_cost > 10 * instance.reward

    def test_needs_positive_sunk_bias(self):
        with pytest.raises(ValueError):
            fan_cost_closed_form(3, 2, 0)
