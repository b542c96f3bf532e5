"""
Parametrised families on which a biased agent pays exponentially more than
the optimal cost.

fan_instance: a path s=v_0, v_1, ..., v_n with a direct edge from every v_i
to t. A doubly naive agent is indifferent at every v_i and keeps going.

singly_exponential_instance: n stages v_i -> u_i -> {t_i, w_i -> t_i} -> t.
A singly sophisticated agent always prefers the next stage and gives up at
the last one.
"""

from fractions import Fraction
from typing import List, Tuple

from biasplan_types import AgentParams, Instance
from biasplan_types.rational import Number, parse_rational

from ..core.errors import GeneratorPreconditionError
from .builder import GraphBuilder
from .registry import GeneratorOptions, instance_generator


def fan_ratio(b: Fraction, lam: Fraction) -> Fraction:
    """Growth factor r = b(b + lam) / (b^2 + lam) between consecutive stages."""
    return b * (b + lam) / (b * b + lam)


def fan_costs(
    n: int, b: Number, lam: Number, y0: Number
) -> Tuple[List[Fraction], List[Fraction]]:
    """(x_1..x_n, y_0..y_n) of the fan instance."""
    b, lam, y0 = parse_rational(b), parse_rational(lam), parse_rational(y0)
    r = fan_ratio(b, lam)
    first = y0 * b * (b - 1) / (b * b + lam)
    xs = [first * r ** (i - 1) for i in range(1, n + 1)]
    ys = [y0 * r**i for i in range(n + 1)]
    return xs, ys


def fan_instance(n: int, b: Number, lam: Number, y0: Number = 1) -> Instance:
    b, lam, y0 = parse_rational(b), parse_rational(lam), parse_rational(y0)
    if n < 1:
        raise GeneratorPreconditionError(f"fan needs at least one stage, got n={n}")
    if b <= 1 or lam <= 0 or y0 <= 0:
        raise GeneratorPreconditionError(
            f"fan needs b > 1, lam > 0 and y0 > 0, got b={b}, lam={lam}, y0={y0}"
        )
    xs, ys = fan_costs(n, b, lam, y0)

    def name(i: int) -> str:
        return "s" if i == 0 else f"v{i}"

    builder = GraphBuilder()
    builder.node(*(name(i) for i in range(n + 1)), "t")
    for i in range(n + 1):
        builder.edge(name(i), "t", ys[i])
        if i < n:
            builder.edge(name(i), name(i + 1), xs[i])

    return Instance(
        graph=builder.build("s", "t"),
        reward=b * y0,
        params=AgentParams(b=b, lam=lam),
        declared=("bias", "sunk"),
        label=f"fan n={n}",
        metadata={"family": "fan", "n": str(n), "y0": str(y0)},
    )


def singly_alpha(b: Fraction, lam: Fraction) -> Fraction:
    return min(1 / (2 * b * lam), (b - 1) / (b * b + 2 * lam))


def singly_exponential_instance(
    n: int,
    b: Number,
    lam: Number,
    reward: Number,
    eps: Number = Fraction(1, 100),
) -> Instance:
    b, lam = parse_rational(b), parse_rational(lam)
    reward, eps = parse_rational(reward), parse_rational(eps)
    if n < 1:
        raise GeneratorPreconditionError(f"need at least one stage, got n={n}")
    if b <= 2 or lam <= 0:
        raise GeneratorPreconditionError(f"need b > 2 and lam > 0, got b={b}, lam={lam}")
    if reward <= 0 or eps <= 0:
        raise GeneratorPreconditionError(
            f"need positive reward and eps, got reward={reward}, eps={eps}"
        )

    alpha = singly_alpha(b, lam)
    stage_rewards = [reward * (1 + alpha * lam) ** i for i in range(n + 1)]

    builder = GraphBuilder()
    builder.node("s")
    previous = "s"
    for i in range(1, n + 1):
        before, after = stage_rewards[i - 1], stage_rewards[i]
        x = alpha * before
        z = before / (b * b) + eps
        y = after / b - before / (b * b)
        stage_checks = (
            ("b*z < R_prev", b * z < before),
            ("b*y + z < R_prev", b * y + z < before),
            ("b*x + y + z < R_prev", b * x + y + z < before),
            ("b^2*z <= R_next", b * b * z <= after),
        )
        for description, holds in stage_checks:
            if not holds:
                raise GeneratorPreconditionError(
                    f"stage {i}: {description} fails for b={b}, lam={lam}, eps={eps}"
                )

        v, u, w, t = f"v{i}", f"u{i}", f"w{i}", f"t{i}"
        builder.edge(previous, v, x)
        builder.edge(v, u, y)
        builder.edge(u, t, z)
        builder.edge(u, w, 0)
        builder.edge(w, t, b * z)
        builder.edge(t, "t", 0)
        previous = v

    return Instance(
        graph=builder.build("s", "t"),
        reward=reward,
        params=AgentParams(b=b, lam=lam),
        declared=("bias", "sunk"),
        label=f"singly-exp n={n}",
        metadata={"family": "singly-exp", "n": str(n), "alpha": str(alpha), "eps": str(eps)},
    )


@instance_generator("fan", "Doubly naive agent pays exponentially more (needs lam > 0)")
def _generate_fan(options: GeneratorOptions) -> Instance:
    return fan_instance(
        n=options.n or 5,
        b=options.bias if options.bias is not None else 2,
        lam=options.sunk if options.sunk is not None else Fraction(1, 2),
        y0=options.y0 if options.y0 is not None else 1,
    )


@instance_generator("singly-exp", "Singly sophisticated agent pays exponentially more")
def _generate_singly_exp(options: GeneratorOptions) -> Instance:
    return singly_exponential_instance(
        n=options.n or 5,
        b=options.bias if options.bias is not None else 3,
        lam=options.sunk if options.sunk is not None else Fraction(1, 2),
        reward=options.reward if options.reward is not None else 10,
        eps=options.eps if options.eps is not None else Fraction(1, 100),
    )
