"""
Property suites run by `biasplan verify`.

Each suite returns a SuiteReport; every failure carries the offending
instance in the graph file format so that `biasplan simulate` can replay it.
Random cases are seeded consecutively from the suite seed and may run in a
process pool; results are collected in seed order.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from biasplan_types import AgentKind, BiasplanModel, Instance, SubsetSumInstance

from ..agents import count_switches, simulate, simulate_all
from ..analysis import (
    fan_cost_closed_form,
    gap_report,
    singly_switch_checks,
    singly_total_sunk,
    subset_sum_oracle,
)
from ..core.config import settings
from ..core.errors import BiasplanError
from ..core.logger import Logger
from ..generators import (
    fan_instance,
    gadget_sequence,
    random_instance,
    reduction_bias,
    reduction_instance,
    singly_exponential_instance,
)
from ..imports import serialize_graph
from ..planners import brute_force, dp_integer, recursive_states
from .expectations import EXPECTATIONS, FIXTURES, Expected

SUITES = ("fixtures", "equivalence", "bounds", "reduction")
FAN_POINTS = (
    (Fraction(2), Fraction(1, 2), Fraction(1)),
    (Fraction(3), Fraction(1), Fraction(2)),
    (Fraction(3, 2), Fraction(1, 4), Fraction(1)),
    (Fraction(5, 2), Fraction(3, 2), Fraction(1, 3)),
)
MAX_RANDOM_NODES = 10
MAX_RANDOM_COST = 12
CONTEXT_EVENTS = 5


class SuiteFailure(BiasplanModel):
    check: str
    message: str
    replay: str = ""
    context: Tuple[str, ...] = ()


class SuiteReport(BiasplanModel):
    suite: str
    cases: int
    failures: Tuple[SuiteFailure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


def _context(instance: Optional[Instance]) -> Tuple[str, ...]:
    """The last logged events of the run that produced `instance`."""
    if instance is None or not instance.label:
        return ()
    events = Logger.history(instance.label)[-CONTEXT_EVENTS:]
    return tuple(f"{event.level.value} {event.content}" for event in events)


def _failure(
    check: str, message: str, instance: Optional[Instance] = None
) -> SuiteFailure:
    return SuiteFailure(
        check=check,
        message=message,
        replay=serialize_graph(instance) if instance is not None else "",
        context=_context(instance),
    )


def _map(
    function: Callable[[int], List[SuiteFailure]], seeds: Iterable[int], workers: int
) -> List[List[SuiteFailure]]:
    seeds = list(seeds)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(function, seeds))
    return [function(seed) for seed in seeds]


def sweep_instance(seed: int) -> Instance:
    """The random instance a suite checks for `seed`."""
    n = 2 + seed % (MAX_RANDOM_NODES - 1)
    return random_instance(n, MAX_RANDOM_COST, Fraction(1, 2), seed)


def _compare(expected: Expected, instance: Instance) -> List[SuiteFailure]:
    trace = simulate(instance, expected.kind)
    problems = []
    if trace.outcome_label != expected.outcome:
        problems.append(f"outcome {trace.outcome_label}, expected {expected.outcome}")
    if expected.path is not None and trace.path != expected.path:
        problems.append(f"path {'->'.join(trace.path)}, expected {'->'.join(expected.path)}")
    if trace.total_cost != expected.total_cost:
        problems.append(f"total cost {trace.total_cost}, expected {expected.total_cost}")
    if trace.payoff != expected.payoff:
        problems.append(f"payoff {trace.payoff}, expected {expected.payoff}")
    if expected.switches is not None and count_switches(trace).count != expected.switches:
        problems.append(
            f"{count_switches(trace).count} switches, expected {expected.switches}"
        )
    check = f"{expected.fixture}/{expected.kind.value}"
    return [_failure(check, problem, instance) for problem in problems]


def fixtures_suite(seed: int = 0, trials: int = 0, workers: int = 1) -> SuiteReport:
    """Narrated traces on the hand-built fixtures; seed and trials are unused."""
    instances = {name: build() for name, build in FIXTURES}
    failures: List[SuiteFailure] = []
    for expected in EXPECTATIONS:
        failures.extend(_compare(expected, instances[expected.fixture]))
    return SuiteReport(suite="fixtures", cases=len(EXPECTATIONS), failures=tuple(failures))


def _collapse_failures(instance: Instance) -> List[SuiteFailure]:
    failures: List[SuiteFailure] = []

    def same_route(left: AgentKind, right: AgentKind, check: str, source: Instance) -> None:
        a, b = simulate(source, left), simulate(source, right)
        if (a.outcome_label, a.path, a.total_cost) != (b.outcome_label, b.path, b.total_cost):
            failures.append(
                _failure(
                    check,
                    f"{left.value}: {a.outcome_label} via {'->'.join(a.path)}; "
                    f"{right.value}: {b.outcome_label} via {'->'.join(b.path)}",
                    source,
                )
            )

    unbiased_sunk = instance.with_params(lam=0)
    naive = simulate(unbiased_sunk, AgentKind.DOUBLY_NAIVE)
    if not naive.same_walk(simulate(unbiased_sunk, AgentKind.NAIVE_PRESENT_BIASED)):
        failures.append(
            _failure("lam=0 doubly-naive", "differs from naive present-biased", unbiased_sunk)
        )
    for kind in (AgentKind.SINGLY_SOPHISTICATED, AgentKind.DOUBLY_SOPHISTICATED):
        same_route(
            kind,
            AgentKind.SOPHISTICATED_PRESENT_BIASED,
            f"lam=0 {kind.value}",
            unbiased_sunk,
        )

    unbiased_present = instance.with_params(b=1)
    for kind in AgentKind:
        if kind != AgentKind.OPTIMAL:
            same_route(kind, AgentKind.OPTIMAL, f"b=1 {kind.value}", unbiased_present)

    mixed = simulate(instance, AgentKind.NAIVE_PRESENT_SOPH_SUNK)
    if not mixed.same_walk(simulate(instance, AgentKind.DOUBLY_NAIVE)):
        failures.append(
            _failure("naive-present-soph-sunk", "differs from doubly naive", instance)
        )
    return failures


def _equivalence_case(seed: int) -> List[SuiteFailure]:
    instance = sweep_instance(seed)
    failures: List[SuiteFailure] = []
    full = dp_integer(instance)
    for planner in (recursive_states, brute_force):
        other = planner(instance)
        if other.trace != full.trace:
            failures.append(
                _failure(
                    f"{planner.__name__} vs dp_integer",
                    f"{other.trace.outcome_label} via {'->'.join(other.trace.path)}, "
                    f"dp_integer {full.trace.outcome_label} via {'->'.join(full.trace.path)}",
                    instance,
                )
            )
        for state in other.policy.states:
            if full.policy.get(state.node, state.sunk_cost) != state:
                failures.append(
                    _failure(
                        f"{planner.__name__} vs dp_integer",
                        f"state ({state.node}, {state.sunk_cost}) disagrees",
                        instance,
                    )
                )
                break
    failures.extend(_collapse_failures(instance))
    return failures


def equivalence_suite(
    seed: int = settings.SEED,
    trials: int = settings.TRIALS,
    workers: int = settings.WORKERS,
) -> SuiteReport:
    """The three planners agree, and the model collapses at lam=0 and b=1."""
    results = _map(_equivalence_case, range(seed, seed + trials), workers)
    failures = tuple(failure for case in results for failure in case)
    return SuiteReport(suite="equivalence", cases=trials, failures=failures)


def _bounds_failures(instance: Instance) -> List[SuiteFailure]:
    report = gap_report(instance)
    checks = list(report.violations)
    checks.extend(
        check
        for check in singly_switch_checks(instance)
        if not (check.holds and check.recheck())
    )
    return [
        _failure(check.name, f"observed {check.observed} exceeds {check.bound}", instance)
        for check in checks
    ]


def _bounds_case(seed: int) -> List[SuiteFailure]:
    return _bounds_failures(sweep_instance(seed))


def _family_failures() -> List[SuiteFailure]:
    failures: List[SuiteFailure] = []
    for b, lam, y0 in FAN_POINTS:
        for n in range(1, 21):
            instance = fan_instance(n, b, lam, y0)
            trace = simulate(instance, AgentKind.DOUBLY_NAIVE)
            expected = fan_cost_closed_form(n, b, lam, y0)
            if not trace.reached or trace.total_cost != expected:
                failures.append(
                    _failure(
                        "fan closed form",
                        f"{trace.outcome_label} at cost {trace.total_cost}, "
                        f"expected {expected}",
                        instance,
                    )
                )

    b, lam, reward = Fraction(3), Fraction(1, 2), Fraction(10)
    for n in range(1, 13):
        instance = singly_exponential_instance(n, b, lam, reward)
        trace = simulate(instance, AgentKind.SINGLY_SOPHISTICATED)
        expected = singly_total_sunk(n, b, lam, reward)
        switches = count_switches(trace).count
        if (trace.abandoned_at, trace.total_cost, switches) != (f"v{n}", expected, n):
            failures.append(
                _failure(
                    "singly exponential",
                    f"{trace.outcome_label}, cost {trace.total_cost}, {switches} switches; "
                    f"expected AbandonedAt(v{n}), cost {expected}, {n} switches",
                    instance,
                )
            )
    return failures


def bounds_suite(
    seed: int = settings.SEED,
    trials: int = settings.TRIALS,
    workers: int = settings.WORKERS,
) -> SuiteReport:
    """Payoff gap bounds on fixtures and random instances, plus the exponential families."""
    failures: List[SuiteFailure] = []
    for _, build in FIXTURES:
        failures.extend(_bounds_failures(build()))
    failures.extend(_family_failures())
    for case in _map(_bounds_case, range(seed, seed + trials), workers):
        failures.extend(case)
    return SuiteReport(
        suite="bounds", cases=len(FIXTURES) + trials, failures=tuple(failures)
    )


def subset_sum_case(seed: int, max_n: int = 12) -> SubsetSumInstance:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    return SubsetSumInstance(
        xs=tuple(rng.randint(1, 15) for _ in range(n)), target=rng.randint(1, 40)
    )


def reduction_failures(
    ss: SubsetSumInstance, lam: Fraction = Fraction(1, 2)
) -> List[SuiteFailure]:
    """Started exactly when a subset hits the target, with the target as sunk cost."""
    failures: List[SuiteFailure] = []
    b = reduction_bias(lam)
    instance = reduction_instance(ss, lam)
    for x in ss.xs:
        problems = gadget_sequence(x, b).violations()
        failures.extend(
            _failure(f"gadget x={x}", problem, instance) for problem in problems
        )

    result = recursive_states(instance)
    witness = subset_sum_oracle(ss)
    if result.started != (witness is not None):
        failures.append(
            _failure(
                "reduction equivalence",
                f"started={result.started} but oracle witness is {witness}",
                instance,
            )
        )
    if result.started:
        last = f"v{len(ss.xs) + 1}"
        sunk: Dict[str, Fraction] = {step.node: step.sunk_cost for step in result.trace.steps}
        if sunk.get(last) != ss.target:
            failures.append(
                _failure(
                    "reduction sunk cost",
                    f"sunk cost at {last} is {sunk.get(last)}, expected {ss.target}",
                    instance,
                )
            )
    return failures


def _reduction_case(seed: int) -> List[SuiteFailure]:
    return reduction_failures(subset_sum_case(seed))


def reduction_suite(
    seed: int = settings.SEED,
    trials: int = settings.TRIALS,
    workers: int = settings.WORKERS,
) -> SuiteReport:
    """Doubly sophisticated starting on the reduction graph versus a subset-sum oracle."""
    failures: List[SuiteFailure] = []
    expected = tuple(Fraction(k, 5) for k in (1, 1, 2, 4, 8, 4))
    if gadget_sequence(4, Fraction(5, 2)).costs != expected:
        failures.append(
            _failure("gadget x=4 b=5/2", "sequence differs from 1/5,1/5,2/5,4/5,8/5,4/5")
        )
    for case in _map(_reduction_case, range(seed, seed + trials), workers):
        failures.extend(case)
    return SuiteReport(suite="reduction", cases=trials + 1, failures=tuple(failures))


SUITE_RUNNERS: Dict[str, Callable[..., SuiteReport]] = {
    "fixtures": fixtures_suite,
    "equivalence": equivalence_suite,
    "bounds": bounds_suite,
    "reduction": reduction_suite,
}


def run_suites(
    name: str,
    seed: int = settings.SEED,
    trials: int = settings.TRIALS,
    workers: int = settings.WORKERS,
) -> List[SuiteReport]:
    """Run one suite, or every suite for `all`, logging progress per suite."""
    names = SUITES if name == "all" else (name,)
    unknown = [suite for suite in names if suite not in SUITE_RUNNERS]
    if unknown:
        raise BiasplanError(f"Unknown suite '{name}'. Available: all, {', '.join(SUITES)}")

    reports = []
    for suite in names:
        Logger.pending(suite, {"message": f"running {trials} trials from seed {seed}"})
        report = SUITE_RUNNERS[suite](seed=seed, trials=trials, workers=workers)
        if report.passed:
            Logger.completed(suite, {"cases": report.cases})
        else:
            Logger.error(
                suite, {"cases": report.cases, "failures": len(report.failures)}
            )
        reports.append(report)
    return reports
