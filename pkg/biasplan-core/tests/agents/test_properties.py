"""Model-collapse and equivalence properties over seeded random instances."""

from fractions import Fraction
from itertools import pairwise

from hypothesis import given, settings
from hypothesis import strategies as st

from biasplan_core.agents import simulate, simulate_all
from biasplan_core.generators import (
    deadline_fixture,
    doubly_vs_soph_fixture,
    gym_fixture,
    random_instance,
    sing_abandons_fixture,
    sing_better_fixture,
)
from biasplan_types import AgentKind

seeds = st.integers(min_value=0, max_value=10**6)
sizes = st.integers(min_value=2, max_value=9)


def route(trace):
    return (trace.outcome_label, trace.path, trace.total_cost)


@settings(max_examples=150, deadline=None)
@given(seed=seeds, n=sizes)
def test_naive_present_soph_sunk_walks_like_doubly_naive(seed, n):
    instance = random_instance(n, 12, Fraction(1, 2), seed)
    mixed = simulate(instance, AgentKind.NAIVE_PRESENT_SOPH_SUNK)
    assert mixed.same_walk(simulate(instance, AgentKind.DOUBLY_NAIVE))


def test_naive_present_soph_sunk_on_fixtures():
    for build in (
        gym_fixture,
        deadline_fixture,
        sing_abandons_fixture,
        sing_better_fixture,
        doubly_vs_soph_fixture,
    ):
        instance = build()
        mixed = simulate(instance, AgentKind.NAIVE_PRESENT_SOPH_SUNK)
        assert mixed.same_walk(simulate(instance, AgentKind.DOUBLY_NAIVE))


@settings(max_examples=150, deadline=None)
@given(seed=seeds, n=sizes)
def test_without_sunk_cost_bias_the_kinds_collapse(seed, n):
    instance = random_instance(n, 12, Fraction(1, 2), seed, lam=0)
    traces = simulate_all(instance)
    assert traces[AgentKind.DOUBLY_NAIVE].same_walk(
        traces[AgentKind.NAIVE_PRESENT_BIASED]
    )
    present = route(traces[AgentKind.SOPHISTICATED_PRESENT_BIASED])
    assert route(traces[AgentKind.SINGLY_SOPHISTICATED]) == present
    assert route(traces[AgentKind.DOUBLY_SOPHISTICATED]) == present


@settings(max_examples=150, deadline=None)
@given(seed=seeds, n=sizes)
def test_without_present_bias_every_kind_acts_optimally(seed, n):
    instance = random_instance(n, 12, Fraction(1, 2), seed, b=1)
    traces = simulate_all(instance)
    optimal = route(traces[AgentKind.OPTIMAL])
    for kind, trace in traces.items():
        assert route(trace) == optimal, kind


@settings(max_examples=150, deadline=None)
@given(seed=seeds, n=sizes)
def test_perceived_reward_never_decreases(seed, n):
    instance = random_instance(n, 12, Fraction(1, 2), seed)
    for trace in simulate_all(instance).values():
        rewards = [step.perceived_reward for step in trace.steps]
        assert all(a <= b for a, b in pairwise(rewards))
        assert rewards[0] == instance.reward


@settings(max_examples=150, deadline=None)
@given(seed=seeds, n=sizes)
def test_moves_are_within_the_perceived_reward(seed, n):
    instance = random_instance(n, 12, Fraction(1, 2), seed)
    for trace in simulate_all(instance).values():
        for step in trace.steps:
            if step.perceived_cost is not None:
                assert step.perceived_cost <= step.perceived_reward
