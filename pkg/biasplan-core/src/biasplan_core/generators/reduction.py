"""
Subset sum to doubly sophisticated planning.

For integers x_1..x_n and a target T, the graph chains v_1 .. v_{n+1}. Each
step v_i -> v_{i+1} can be made for free through w_i or by paying exactly
x_i along a gadget: a chain of edges 1/(2b), 1/(2b), 1/b, 2/b, ... whose
costs add up to x_i. The last edge v_{n+1} -> t costs T and the reward is
2T + lam - eps with b = 2 + lam.

A doubly sophisticated agent at s sees perceived cost K + T when its policy
pays K on gadgets, so it starts only if K <= T. At v_{n+1} its future self
finishes only if (2 + lam) T <= 2T + lam - eps + lam K, which needs K >= T.
Hence the agent starts exactly when some subset of the x_i sums to T.
"""

import math
from fractions import Fraction
from typing import Dict, List, Optional

from biasplan_types import AgentParams, GadgetSequence, Instance, SubsetSumInstance
from biasplan_types.rational import Number, format_rational, parse_rational

from ..core.errors import GeneratorPreconditionError
from .builder import GraphBuilder


def gadget_sequence(x: int, b: Number) -> GadgetSequence:
    b = parse_rational(b)
    if x < 1:
        raise GeneratorPreconditionError(f"gadget value must be at least 1, got {x}")
    if b <= 1:
        raise GeneratorPreconditionError(f"present bias must exceed 1, got {b}")

    half = 1 / (2 * b)
    costs: List[Fraction] = [half, half]
    total = 2 * half
    while total + 2 * costs[-1] < x:
        costs.append(2 * costs[-1])
        total += costs[-1]
    # total < x holds here, so the remainder is positive
    costs.append(x - total)
    return GadgetSequence(x=x, b=b, costs=tuple(costs))


def reduction_bias(lam: Fraction) -> Fraction:
    return 2 + lam


def default_eps(lam: Fraction) -> Fraction:
    return 1 / (4 * reduction_bias(lam))


def _check_reduction(lam: Fraction, eps: Fraction) -> None:
    if not Fraction(1, 2) <= lam < 1:
        raise GeneratorPreconditionError(f"sunk-cost bias must lie in [1/2, 1), got {lam}")
    b = reduction_bias(lam)
    if not 0 < eps <= 1 / (2 * b):
        raise GeneratorPreconditionError(
            f"eps must lie in (0, {format_rational(1 / (2 * b))}], got {eps}"
        )


def reduction_instance(
    ss: SubsetSumInstance, lam: Number, eps: Optional[Number] = None
) -> Instance:
    lam = parse_rational(lam)
    eps = default_eps(lam) if eps is None else parse_rational(eps)
    _check_reduction(lam, eps)
    b = reduction_bias(lam)
    n = len(ss.xs)

    builder = GraphBuilder()
    builder.node("s", *(f"v{i}" for i in range(1, n + 2)))
    builder.edge("s", "v1", 0)
    for i, x in enumerate(ss.xs, start=1):
        here, there, skip = f"v{i}", f"v{i + 1}", f"w{i}"
        builder.edge(here, skip, 0)
        builder.edge(skip, there, 0)

        gadget = gadget_sequence(x, b)
        chain = [here] + [f"g{i}_{k}" for k in range(1, len(gadget.costs))] + [there]
        for tail, head, cost in zip(chain, chain[1:], gadget.costs):
            builder.edge(tail, head, cost)
    builder.edge(f"v{n + 1}", "t", ss.target)

    return Instance(
        graph=builder.build("s", "t"),
        reward=2 * ss.target + lam - eps,
        params=AgentParams(b=b, lam=lam),
        declared=("bias", "sunk"),
        label=f"reduction n={n} T={ss.target}",
        metadata={
            "family": "reduction",
            "xs": ",".join(str(x) for x in ss.xs),
            "target": str(ss.target),
            "eps": format_rational(eps),
        },
    )


def reduction_sidecar(
    ss: SubsetSumInstance, lam: Number, eps: Optional[Number] = None
) -> Dict[str, object]:
    """Parameters of a reduction instance, for cross-checking against an oracle."""
    lam = parse_rational(lam)
    eps = default_eps(lam) if eps is None else parse_rational(eps)
    _check_reduction(lam, eps)
    b = reduction_bias(lam)
    return {
        "xs": list(ss.xs),
        "target": ss.target,
        "b": format_rational(b),
        "lam": format_rational(lam),
        "eps": format_rational(eps),
        "gadget_lengths": [len(gadget_sequence(x, b).costs) for x in ss.xs],
        "gadget_bound": [math.ceil(math.log2(6 * x + 1)) + 2 for x in ss.xs],
    }
