"""
Exact payoff gaps between agent kinds and the closed forms they are
compared against. Every check is a rational inequality; nothing is rounded.
"""

from fractions import Fraction
from typing import Dict, List, Optional

from biasplan_types import AgentKind, BoundCheck, GapReport, Instance, TraversalTrace
from biasplan_types.rational import Number, parse_rational

from ..agents import count_switches, simulate, simulate_all
from ..core.config import settings
from ..core.graph import shortest_path_costs
from ..generators.families import fan_ratio, singly_alpha
from ..planners import min_reward, recursive_states

Traces = Dict[AgentKind, TraversalTrace]


def optimal_cost(instance: Instance) -> Fraction:
    """C_o, the cheapest source-to-target cost."""
    graph = instance.graph
    return shortest_path_costs(graph)[graph.source]


def _slack(instance: Instance) -> Fraction:
    return (instance.params.b - 1) * optimal_cost(instance)


def _traces(instance: Instance, traces: Optional[Traces]) -> Traces:
    return traces if traces is not None else simulate_all(instance)


def gap_doubly_soph_vs_optimal(
    instance: Instance, traces: Optional[Traces] = None
) -> BoundCheck:
    """payoff(Optimal) - payoff(DoublySophisticated) <= (b - 1) C_o."""
    traces = _traces(instance, traces)
    gap = (
        traces[AgentKind.OPTIMAL].payoff
        - traces[AgentKind.DOUBLY_SOPHISTICATED].payoff
    )
    return BoundCheck.compare("optimal - doubly-soph", gap, _slack(instance))


def gap_soph_kinds(
    instance: Instance, traces: Optional[Traces] = None
) -> List[BoundCheck]:
    traces = _traces(instance, traces)
    doubly = traces[AgentKind.DOUBLY_SOPHISTICATED].payoff
    present = traces[AgentKind.SOPHISTICATED_PRESENT_BIASED].payoff
    singly = traces[AgentKind.SINGLY_SOPHISTICATED].payoff
    slack = _slack(instance)
    return [
        BoundCheck.compare("|doubly-soph - soph-present|", abs(doubly - present), slack),
        BoundCheck.compare("singly-soph - doubly-soph", singly - doubly, slack),
    ]


def reward_at_bound_checks(instance: Instance) -> List[BoundCheck]:
    """
    With the reward set to b C_o a doubly sophisticated agent starts, pays
    at most b C_o, and the smallest reward that makes it start is no larger.
    """
    upper = instance.params.b * optimal_cost(instance)
    result = recursive_states(instance.with_reward(upper))
    checks = [
        BoundCheck.compare(
            "doubly-soph not started at R = b*C_o",
            Fraction(0) if result.started else Fraction(1),
            Fraction(0),
        ),
        BoundCheck.compare(
            "doubly-soph cost at R = b*C_o", result.trace.total_cost, upper
        ),
    ]
    if result.started:
        threshold = min_reward(
            instance.graph,
            instance.params.b,
            instance.params.lam,
            settings.DENOMINATOR_BOUND,
        )
        checks.append(BoundCheck.compare("min_reward", threshold, upper))
    return checks


def gap_report(instance: Instance, with_reward_bound: bool = True) -> GapReport:
    """Payoff of every kind and all bound checks for one instance."""
    traces = simulate_all(instance)
    checks = [gap_doubly_soph_vs_optimal(instance, traces)]
    checks.extend(gap_soph_kinds(instance, traces))
    if with_reward_bound:
        checks.extend(reward_at_bound_checks(instance))
    return GapReport(
        label=instance.label,
        payoffs={kind: trace.payoff for kind, trace in traces.items()},
        optimal_cost=optimal_cost(instance),
        checks=tuple(checks),
    )


def singly_gap_bound(k: int, lam: Number, reward: Number) -> Fraction:
    """((1 + lam)^k - 1) / lam * R + R, the most a singly sophisticated agent
    with k plan switches can lose against the optimum."""
    lam, reward = parse_rational(lam), parse_rational(reward)
    if lam <= 0:
        raise ValueError(f"the switch bound needs lam > 0, got {lam}")
    if k < 0:
        raise ValueError(f"switch count must be non-negative, got {k}")
    return ((1 + lam) ** k - 1) / lam * reward + reward


def singly_switch_checks(
    instance: Instance, trace: Optional[TraversalTrace] = None
) -> List[BoundCheck]:
    """
    Bounds on the cost segments between the plan switches of a singly
    sophisticated walk.

    Each segment follows the plan made at its start, so it costs at most
    R + lam times what was paid before it; the prefix sums then stay within
    ((1 + lam)^i - 1)/lam R. A walk that abandons does so at a switch and its
    last segment is empty, so the payoff gap is checked with k counting the
    segments that cost something.
    """
    if trace is None:
        trace = simulate(instance, AgentKind.SINGLY_SOPHISTICATED)
    reward, lam = instance.reward, instance.params.lam
    summary = count_switches(trace)
    checks: List[BoundCheck] = []
    paid = Fraction(0)
    for index, cost in enumerate(summary.segment_costs):
        checks.append(
            BoundCheck.compare(
                f"segment {index} cost", cost, reward + lam * paid
            )
        )
        paid += cost
        if lam > 0:
            checks.append(
                BoundCheck.compare(
                    f"cost of first {index + 1} segments",
                    paid,
                    ((1 + lam) ** (index + 1) - 1) / lam * reward,
                )
            )
    paid_segments = summary.count + (1 if summary.segment_costs[-1] > 0 else 0)
    if lam > 0:
        optimal = simulate(instance, AgentKind.OPTIMAL)
        checks.append(
            BoundCheck.compare(
                "optimal - singly-soph",
                optimal.payoff - trace.payoff,
                singly_gap_bound(paid_segments, lam, reward),
            )
        )
    return checks


def fan_cost_closed_form(n: int, b: Number, lam: Number, y0: Number = 1) -> Fraction:
    """(y0 / lam) [(b + lam) r^n - b], the doubly naive cost on the fan."""
    b, lam, y0 = parse_rational(b), parse_rational(lam), parse_rational(y0)
    if lam <= 0:
        raise ValueError(f"the fan closed form needs lam > 0, got {lam}")
    return y0 / lam * ((b + lam) * fan_ratio(b, lam) ** n - b)


def fan_growth_ratio(b: Number, lam: Number) -> Fraction:
    """1 + (b - 1) lam / (b^2 + lam); equals the stage ratio r."""
    b, lam = parse_rational(b), parse_rational(lam)
    return 1 + (b - 1) * lam / (b * b + lam)


def fan_sum_x(i: int, b: Number, lam: Number, y0: Number = 1) -> Fraction:
    """x_1 + ... + x_i = (b y0 / lam)(r^i - 1)."""
    b, lam, y0 = parse_rational(b), parse_rational(lam), parse_rational(y0)
    return b * y0 / lam * (fan_ratio(b, lam) ** i - 1)


def singly_total_sunk(n: int, b: Number, lam: Number, reward: Number) -> Fraction:
    """((1 + alpha lam)^n - 1) / lam * R, what the singly sophisticated agent
    pays on the exponential family before giving up."""
    b, lam, reward = parse_rational(b), parse_rational(lam), parse_rational(reward)
    alpha = singly_alpha(b, lam)
    return ((1 + alpha * lam) ** n - 1) / lam * reward
