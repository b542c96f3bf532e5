"""
Small hand-built instances with known behaviour for every agent kind.
"""

from fractions import Fraction
from typing import Optional

from biasplan_types import AgentParams, Instance
from biasplan_types.rational import Number, parse_rational

from ..core.errors import GeneratorPreconditionError
from .builder import GraphBuilder
from .registry import GeneratorOptions, instance_generator

DEADLINE_WEEKS = 4
DEADLINE_UNITS = 3
DEADLINE_COSTS = {0: Fraction(0), 1: Fraction(4), 2: Fraction(10)}


def _fixture(
    builder: GraphBuilder,
    reward: Number,
    b: Number,
    lam: Number,
    label: str,
    **metadata: str,
) -> Instance:
    return Instance(
        graph=builder.build("s", "t"),
        reward=parse_rational(reward),
        params=AgentParams(b=parse_rational(b), lam=parse_rational(lam)),
        declared=("bias", "sunk"),
        label=label,
        metadata={"family": "fixture", **metadata},
    )


def gym_fixture(
    reward: Optional[Number] = None, b: Number = 2, lam: Number = Fraction(1, 2)
) -> Instance:
    """Cheap start then an expensive finish, or the reverse."""
    builder = GraphBuilder()
    builder.edge("s", "v", 1)
    builder.edge("v", "t", 12)
    builder.edge("s", "w", 4)
    builder.edge("w", "t", 10)
    return _fixture(builder, 19 if reward is None else reward, b, lam, "gym")


def _deadline_node(week: int, units: int) -> str:
    if (week, units) == (0, 0):
        return "s"
    if (week, units) == (DEADLINE_WEEKS, DEADLINE_UNITS):
        return "t"
    return f"v_{week}_{units}"


def _deadline_feasible(week: int, units: int) -> bool:
    reachable = units <= 2 * week
    finishable = DEADLINE_UNITS - units <= 2 * (DEADLINE_WEEKS - week)
    return reachable and finishable and units <= DEADLINE_UNITS


def deadline_fixture(full_grid: bool = False) -> Instance:
    """
    Three units of work over four weeks; a week costs 0, 4 or 10 for 0, 1 or
    2 units. Node v_i_j means j units done after i weeks. Unless `full_grid`,
    the edge v_1_0 -> v_2_0 is left out.
    """
    builder = GraphBuilder()
    for week in range(DEADLINE_WEEKS + 1):
        for units in range(DEADLINE_UNITS + 1):
            if _deadline_feasible(week, units):
                builder.node(_deadline_node(week, units))

    for week in range(DEADLINE_WEEKS):
        for units in range(DEADLINE_UNITS + 1):
            if not _deadline_feasible(week, units):
                continue
            for done, cost in DEADLINE_COSTS.items():
                if not _deadline_feasible(week + 1, units + done):
                    continue
                if not full_grid and (week, units, done) == (1, 0, 0):
                    continue
                builder.edge(
                    _deadline_node(week, units),
                    _deadline_node(week + 1, units + done),
                    cost,
                )

    label = "deadline-full" if full_grid else "deadline"
    return _fixture(builder, Fraction(35, 2), 2, Fraction(3, 4), label)


def sing_abandons_fixture() -> Instance:
    """A singly sophisticated agent starts, switches plans and gives up."""
    builder = GraphBuilder()
    builder.edge("s", "u", 2)
    builder.edge("u", "v", 4)
    builder.edge("v", "w", 0)
    builder.edge("v", "t", 3)
    builder.edge("w", "t", 6)
    return _fixture(builder, 11, 2, Fraction(1, 2), "sing-abandons")


def _check_positive(b: Fraction, lam: Fraction, eps: Fraction) -> None:
    if b <= 1:
        raise GeneratorPreconditionError(f"present bias must exceed 1, got {b}")
    if lam <= 0:
        raise GeneratorPreconditionError(f"sunk-cost bias must be positive, got {lam}")
    if eps <= 0:
        raise GeneratorPreconditionError(f"eps must be positive, got {eps}")


def sing_better_fixture(
    b: Number = 2, lam: Number = Fraction(1, 2), eps: Number = Fraction(1, 100)
) -> Instance:
    """
    Two routes s-v1-t (eps then b) and s-v2-t (1 then (b+1) eps) with reward
    b^2 - lam eps. Sunk-cost awareness makes the upper route viable.
    """
    b, lam, eps = parse_rational(b), parse_rational(lam), parse_rational(eps)
    _check_positive(b, lam, eps)
    reward = b * b - lam * eps
    if b * eps + b > reward or b + (b + 1) * eps > reward:
        raise GeneratorPreconditionError(
            f"eps={eps} too large for b={b}, lam={lam}: a route becomes unaffordable"
        )
    builder = GraphBuilder()
    builder.edge("s", "v1", eps)
    builder.edge("v1", "t", b)
    builder.edge("s", "v2", 1)
    builder.edge("v2", "t", (b + 1) * eps)
    return _fixture(builder, reward, b, lam, "sing-better", eps=str(eps))


def doubly_vs_soph_fixture(
    b: Number = 2, lam: Number = Fraction(1, 2), eps: Number = Fraction(1, 100)
) -> Instance:
    """The chain s-v-t costing eps then b, with reward b^2 - lam eps."""
    b, lam, eps = parse_rational(b), parse_rational(lam), parse_rational(eps)
    _check_positive(b, lam, eps)
    reward = b * b - lam * eps
    if reward - b - eps <= 0 or b * eps + b > reward:
        raise GeneratorPreconditionError(
            f"eps={eps} too large for b={b}, lam={lam}: the chain never pays off"
        )
    builder = GraphBuilder()
    builder.edge("s", "v", eps)
    builder.edge("v", "t", b)
    return _fixture(builder, reward, b, lam, "doubly-vs-soph", eps=str(eps))


def _override(instance: Instance, options: GeneratorOptions) -> Instance:
    if options.bias is None and options.sunk is None:
        return instance
    return instance.with_params(b=options.bias, lam=options.sunk)


@instance_generator("gym", "Gym membership: cheap start or cheap finish")
def _generate_gym(options: GeneratorOptions) -> Instance:
    return _override(gym_fixture(reward=options.reward), options)


@instance_generator("deadline", "Four-week deadline grid without v_1_0 -> v_2_0")
def _generate_deadline(options: GeneratorOptions) -> Instance:
    instance = deadline_fixture()
    if options.reward is not None:
        instance = instance.with_reward(options.reward)
    return _override(instance, options)


@instance_generator("deadline-full", "Four-week deadline grid, every edge present")
def _generate_deadline_full(options: GeneratorOptions) -> Instance:
    instance = deadline_fixture(full_grid=True)
    if options.reward is not None:
        instance = instance.with_reward(options.reward)
    return _override(instance, options)


@instance_generator("sing-abandons", "Singly sophisticated agent starts then abandons")
def _generate_sing_abandons(options: GeneratorOptions) -> Instance:
    instance = sing_abandons_fixture()
    if options.reward is not None:
        instance = instance.with_reward(options.reward)
    return _override(instance, options)


@instance_generator("sing-better", "Sunk-cost awareness opens a cheaper route")
def _generate_sing_better(options: GeneratorOptions) -> Instance:
    return sing_better_fixture(
        b=options.bias if options.bias is not None else 2,
        lam=options.sunk if options.sunk is not None else Fraction(1, 2),
        eps=options.eps if options.eps is not None else Fraction(1, 100),
    )


@instance_generator(
    "doubly-vs-soph", "Doubly sophisticated finishes, present-biased never starts"
)
def _generate_doubly_vs_soph(options: GeneratorOptions) -> Instance:
    return doubly_vs_soph_fixture(
        b=options.bias if options.bias is not None else 2,
        lam=options.sunk if options.sunk is not None else Fraction(1, 2),
        eps=options.eps if options.eps is not None else Fraction(1, 100),
    )
