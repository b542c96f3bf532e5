"""
Planning for doubly sophisticated agents.

A doubly sophisticated agent at node u with sunk cost i correctly predicts
what each of its future selves will do given their own sunk costs. Its
decisions therefore form a policy over (node, sunk cost) states:

    cost(t, i) = 0
    cost(u, i) = c(u, v) + cost(v, i + c(u, v))   for the preferred edge (u, v)
    cost(u, i) = INFINITY                          when the agent abandons

where the preferred edge minimises b·c(u, v) + cost(v, i + c(u, v)) and the
agent abandons when that minimum exceeds R + lambda·i.

Three planners compute the same policy: `dp_integer` fills the full table
for integer costs, `recursive_states` only visits reachable states and
accepts rational costs, `brute_force` recomputes every state from scratch.
"""

import math
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Set, Tuple, Union

from biasplan_types import (
    ABANDON,
    FINISH,
    INFINITY,
    AgentKind,
    AgentParams,
    DoublySophResult,
    Instance,
    PolicyState,
    PolicyTable,
    TaskGraph,
    format_cost,
    format_rational,
    parse_rational,
)

from ..core.config import settings
from ..core.errors import DenominatorBoundError, NonIntegerCostError
from ..core.graph import preference_key, shortest_path_costs, topological_order, validate
from ..core.logger import Logger
from ..core.traversal import Choice, DecisionRule, abandon, walk

StateKey = Tuple[str, Fraction]
# Continuation cost of a successor state, None when the state is outside the table.
Lookup = Callable[[str, Fraction], Optional[Union[Fraction, float]]]


def _decide_state(
    instance: Instance, node: str, sunk: Fraction, lookup: Lookup
) -> PolicyState:
    graph = instance.graph
    if node == graph.target:
        return PolicyState(node=node, sunk_cost=sunk, continuation=Fraction(0))

    b = instance.params.b
    best = None
    for position, edge in graph.out_edges(node):
        remaining = lookup(edge.head, sunk + edge.cost)
        if remaining is None:
            continue
        key = preference_key(b * edge.cost + remaining, edge, position)
        if best is None or key < best[0]:
            best = (key, edge, remaining)

    limit = instance.reward + instance.params.lam * sunk
    if best is None or best[0][0] > limit:
        return PolicyState(node=node, sunk_cost=sunk, continuation=INFINITY)
    _, edge, remaining = best
    return PolicyState(
        node=node,
        sunk_cost=sunk,
        edge_id=edge.id,
        continuation=edge.cost + remaining,
    )


def policy_path(
    graph: TaskGraph, policy: PolicyTable, node: str, sunk: Fraction
) -> Tuple[str, ...]:
    """Nodes the policy visits from (node, sunk); just `node` when it abandons there."""
    path = [node]
    state = policy.get(node, sunk)
    while state is not None and state.edge_id is not None:
        edge = graph.edge(state.edge_id)
        sunk += edge.cost
        node = edge.head
        path.append(node)
        state = policy.get(node, sunk)
    return tuple(path)


def policy_rule(graph: TaskGraph, policy: PolicyTable) -> DecisionRule:
    """Decision rule that replays a policy table during a walk."""

    def decide(node: str, sunk: Fraction, rho: Fraction) -> Choice:
        state = policy.get(node, sunk)
        if state is None or state.abandoned:
            return abandon(node)
        edge = graph.edge(state.edge_id)
        successor = policy.get(edge.head, sunk + edge.cost)
        return Choice(
            edge=edge,
            planned_path=policy_path(graph, policy, node, sunk),
            perceived_cost=policy.b * edge.cost + successor.continuation,
        )

    return decide


def _result(
    instance: Instance, states: List[PolicyState], planner: str
) -> DoublySophResult:
    params = instance.params
    policy = PolicyTable(
        reward=instance.reward, b=params.b, lam=params.lam, states=tuple(states)
    )
    trace = walk(
        instance,
        AgentKind.DOUBLY_SOPHISTICATED,
        params.lam,
        policy_rule(instance.graph, policy),
    )
    result = DoublySophResult(trace=trace, policy=policy, started=trace.started)
    Logger.debug(
        instance.label or planner,
        {
            "planner": planner,
            "states": len(policy),
            "started": result.started,
            "total_cost": format_rational(trace.total_cost),
        },
    )
    return result


def dp_integer(instance: Instance) -> DoublySophResult:
    """
    Fill the full (node, sunk cost) table for integer costs.

    Sunk costs range over 0..C where C is the sum of all edge costs. Rows are
    settled in reverse topological order so every successor row is ready. Edges
    into a state whose sunk cost would exceed C are left out of the comparison.
    """
    graph = instance.graph
    if not graph.has_integer_costs:
        offending = [edge.id for edge in graph.edges if edge.cost.denominator != 1]
        raise NonIntegerCostError(
            f"dp_integer needs integer edge costs; edges {offending} are fractional"
        )
    total = int(graph.total_cost)
    table: Dict[StateKey, PolicyState] = {}

    def lookup(node: str, sunk: Fraction) -> Optional[Union[Fraction, float]]:
        state = table.get((node, sunk))
        return None if state is None else state.continuation

    order = topological_order(graph)
    for node in reversed(order):
        for i in range(total + 1):
            sunk = Fraction(i)
            table[(node, sunk)] = _decide_state(instance, node, sunk, lookup)

    states = [table[(node, Fraction(i))] for node in order for i in range(total + 1)]
    return _result(instance, states, "dp_integer")


def recursive_states(instance: Instance) -> DoublySophResult:
    """
    Memoised top-down evaluation over the states reachable from (source, 0).

    Sunk costs are exact fractions, so rational edge costs are fine. The
    depth-first evaluation uses an explicit stack; a state is settled once
    every successor state is.
    """
    graph = instance.graph
    memo: Dict[StateKey, PolicyState] = {}

    def lookup(node: str, sunk: Fraction) -> Optional[Union[Fraction, float]]:
        return memo[(node, sunk)].continuation

    stack: List[StateKey] = [(graph.source, Fraction(0))]
    while stack:
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        node, sunk = key
        pending = []
        if node != graph.target:
            pending = [
                (edge.head, sunk + edge.cost)
                for _, edge in graph.out_edges(node)
                if (edge.head, sunk + edge.cost) not in memo
            ]
        if pending:
            stack.extend(reversed(pending))
            continue
        memo[key] = _decide_state(instance, node, sunk, lookup)
        stack.pop()

    return _result(instance, list(memo.values()), "recursive_states")


def brute_force(instance: Instance) -> DoublySophResult:
    """
    Evaluate every state query from scratch, without memoisation.

    Exponential in general; meant as an oracle for small graphs. States are
    recorded for the returned policy but never read back while evaluating.
    """
    recorded: Dict[StateKey, PolicyState] = {}

    def evaluate(node: str, sunk: Fraction) -> PolicyState:
        state = _decide_state(
            instance,
            node,
            sunk,
            lambda head, head_sunk: evaluate(head, head_sunk).continuation,
        )
        recorded[(node, sunk)] = state
        return state

    evaluate(instance.graph.source, Fraction(0))
    return _result(instance, list(recorded.values()), "brute_force")


def _starts_at(graph: TaskGraph, b: Fraction, lam: Fraction, reward: Fraction) -> bool:
    instance = Instance(graph=graph, reward=reward, params=AgentParams(b=b, lam=lam))
    return recursive_states(instance).started


def _candidate_thresholds(graph: TaskGraph, b: Fraction, lam: Fraction) -> Set[Fraction]:
    """Rewards at which some reachable state's continue/abandon test is tight."""
    order = topological_order(graph)
    suffixes: Dict[str, Set[Fraction]] = {}
    for node in reversed(order):
        if node == graph.target:
            suffixes[node] = {Fraction(0)}
            continue
        suffixes[node] = {
            edge.cost + rest
            for _, edge in graph.out_edges(node)
            for rest in suffixes[edge.head]
        }
    sunk_costs: Dict[str, Set[Fraction]] = {node: set() for node in order}
    sunk_costs[graph.source].add(Fraction(0))
    for node in order:
        if node == graph.target:
            continue
        for _, edge in graph.out_edges(node):
            sunk_costs[edge.head].update(i + edge.cost for i in sunk_costs[node])

    candidates: Set[Fraction] = set()
    for node in order:
        for _, edge in graph.out_edges(node):
            for rest in suffixes[edge.head]:
                for i in sunk_costs[node]:
                    candidates.add(b * edge.cost + rest - lam * i)
    return candidates


def _largest_below(value: Fraction, bound: int) -> Fraction:
    """Largest p/q < value with 1 <= q <= bound."""
    return max(Fraction(math.ceil(value * q) - 1, q) for q in range(1, bound + 1))


def _smallest_at_or_above(value: Fraction, bound: int) -> Fraction:
    """Smallest p/q >= value with 1 <= q <= bound."""
    return min(Fraction(math.ceil(value * q), q) for q in range(1, bound + 1))


def _last_true(holds: Callable[[int], bool], high: int) -> int:
    """Largest k in 1..high with holds(k), given holds(1) and a single true-to-false switch."""
    low = 1
    while low < high:
        middle = (low + high + 1) // 2
        if holds(middle):
            low = middle
        else:
            high = middle - 1
    return low


def _search(
    graph: TaskGraph, b: Fraction, lam: Fraction, denominator_bound: int, upper: Fraction
) -> Fraction:
    """
    Smallest rational with denominator <= denominator_bound at which the agent
    starts, assuming starting is monotone in the reward.

    Bisects the integers first, then descends the Stern-Brocot tree between
    the two neighbouring integers. `left` never starts and `right` always
    does; both stay Farey neighbours, so every rational strictly between them
    has denominator at least left.denominator + right.denominator. Runs of
    mediant steps in one direction are bisected as well.
    """

    def starts(reward: Fraction) -> bool:
        return reward >= upper or _starts_at(graph, b, lam, reward)

    low, high = 0, math.ceil(upper)
    while low < high:
        middle = (low + high) // 2
        if starts(Fraction(middle)):
            high = middle
        else:
            low = middle + 1
    if low == 0:
        return Fraction(0)

    left, right = Fraction(low - 1), Fraction(low)
    while left.denominator + right.denominator <= denominator_bound:
        ln, ld = left.numerator, left.denominator
        rn, rd = right.numerator, right.denominator
        if starts(Fraction(ln + rn, ld + rd)):
            k = _last_true(
                lambda k: starts(Fraction(k * ln + rn, k * ld + rd)),
                (denominator_bound - rd) // ld,
            )
            right = Fraction(k * ln + rn, k * ld + rd)
        else:
            k = _last_true(
                lambda k: not starts(Fraction(ln + k * rn, ld + k * rd)),
                (denominator_bound - ld) // rd,
            )
            left = Fraction(ln + k * rn, ld + k * rd)
    return min(right, upper)


def min_reward(
    graph: TaskGraph,
    b,
    lam,
    denominator_bound: int = settings.DENOMINATOR_BOUND,
) -> Fraction:
    """
    Smallest reward with denominator at most `denominator_bound` at which a
    doubly sophisticated agent starts, or b·C_o itself when no such reward
    lies below it.

    The search assumes that starting is monotone in the reward. The result
    is verified afterwards: the agent must start there and must not start at
    the largest representable reward below it. When the verification fails a
    scan over the rewards at which some continue/abandon test is tight
    replaces the search result.
    """
    validate(graph)
    b, lam = parse_rational(b), parse_rational(lam)
    if denominator_bound < 1:
        raise DenominatorBoundError(
            f"denominator_bound must be positive, got {denominator_bound}"
        )
    upper = b * shortest_path_costs(graph)[graph.source]
    if not _starts_at(graph, b, lam, upper):
        raise AssertionError(f"agent does not start at reward b·C_o = {upper}")

    result = _search(graph, b, lam, denominator_bound, upper)
    previous = _largest_below(result, denominator_bound)
    verified = _starts_at(graph, b, lam, result) and (
        previous < 0 or not _starts_at(graph, b, lam, previous)
    )
    if not verified:
        Logger.warn(
            "min_reward",
            {
                "message": "search result failed verification, scanning",
                "result": format_rational(result),
            },
        )
        result = _scan(graph, b, lam, denominator_bound, upper)

    if result > upper:
        raise AssertionError(f"minimum reward {result} exceeds b·C_o = {upper}")
    return result


def _scan(
    graph: TaskGraph, b: Fraction, lam: Fraction, denominator_bound: int, upper: Fraction
) -> Fraction:
    # Decisions only change at tight rewards, so each candidate is the first
    # representable reward of an interval on which the walk is fixed.
    rewards = {Fraction(0), upper}
    for candidate in _candidate_thresholds(graph, b, lam):
        if 0 <= candidate <= upper:
            rewards.add(min(_smallest_at_or_above(candidate, denominator_bound), upper))
    for reward in sorted(rewards):
        if _starts_at(graph, b, lam, reward):
            return reward
    return upper


def check_policy_table(graph: TaskGraph, policy: PolicyTable) -> List[str]:
    """
    Every state of the table that contradicts the decision rule.

    An edge whose successor state is absent from the table is skipped, the
    same rule the planners apply.
    """
    instance = Instance(
        graph=graph,
        reward=policy.reward,
        params=AgentParams(b=policy.b, lam=policy.lam),
    )

    def lookup(node: str, sunk: Fraction) -> Optional[Union[Fraction, float]]:
        state = policy.get(node, sunk)
        return None if state is None else state.continuation

    problems: List[str] = []
    for state in policy.states:
        label = f"({state.node}, {format_rational(state.sunk_cost)})"
        if state.node == graph.target:
            if state.continuation != 0 or state.edge_id is not None:
                problems.append(f"{label}: target state must finish at cost 0")
            continue
        expected = _decide_state(instance, state.node, state.sunk_cost, lookup)
        if expected.edge_id != state.edge_id:
            problems.append(
                f"{label}: decision {state.edge_id or ABANDON}, "
                f"expected {expected.edge_id or ABANDON}"
            )
        if expected.continuation != state.continuation:
            problems.append(
                f"{label}: continuation {format_cost(state.continuation)}, "
                f"expected {format_cost(expected.continuation)}"
            )
    return problems


def dump_policy(graph: TaskGraph, policy: PolicyTable) -> str:
    """One line per state, `node sunk_cost decision continuation_cost`."""
    position = {node: index for index, node in enumerate(topological_order(graph))}
    lines = []
    for state in sorted(
        policy.states, key=lambda s: (position[s.node], s.sunk_cost)
    ):
        if state.node == graph.target:
            decision = FINISH
        else:
            decision = state.edge_id or ABANDON
        lines.append(
            f"{state.node} {format_rational(state.sunk_cost)} {decision} "
            f"{format_cost(state.continuation)}"
        )
    return "\n".join(lines) + "\n"

