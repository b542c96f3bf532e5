import random
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from biasplan_types import AgentParams, Instance
from biasplan_types.rational import Number, parse_rational

from ..core.errors import GeneratorPreconditionError
from ..core.graph import shortest_path_costs
from .builder import GraphBuilder
from .registry import GeneratorOptions, instance_generator

BIAS_CHOICES = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3))
SUNK_CHOICES = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(1), Fraction(3, 2))
REWARD_STEPS = 64


def _layers(rng: random.Random, count: int) -> List[int]:
    """Layer index of every internal node; each of the layers is non-empty."""
    layer_count = rng.randint(1, count)
    layers = list(range(layer_count)) + [
        rng.randrange(layer_count) for _ in range(count - layer_count)
    ]
    return sorted(layers)


def _edges(
    rng: random.Random, layer_of: Dict[str, int], order: List[str], density: Fraction
) -> List[Tuple[str, str]]:
    pairs = {
        (tail, head)
        for tail in order
        for head in order
        if layer_of[tail] < layer_of[head] and rng.random() < density
    }
    # Every internal node needs a way in and a way out.
    for node in order[1:-1]:
        if not any(head == node for _, head in pairs):
            earlier = [tail for tail in order if layer_of[tail] < layer_of[node]]
            pairs.add((rng.choice(earlier), node))
        if not any(tail == node for tail, _ in pairs):
            later = [head for head in order if layer_of[head] > layer_of[node]]
            pairs.add((node, rng.choice(later)))
    position = {node: index for index, node in enumerate(order)}
    return sorted(pairs, key=lambda pair: (position[pair[0]], position[pair[1]]))


def random_instance(
    n: int,
    max_cost: int,
    edge_density: Number = Fraction(1, 2),
    seed: int = 0,
    b: Optional[Number] = None,
    lam: Optional[Number] = None,
) -> Instance:
    """
    Layered random DAG on n nodes s, n1, ..., t with integer costs in
    [0, max_cost]. Unset b and lam are drawn from small fixed menus and the
    reward is drawn from [0, 2 b C_o]. The seed fixes everything.
    """
    if n < 2:
        raise GeneratorPreconditionError(f"a task graph needs at least 2 nodes, got {n}")
    if max_cost < 0:
        raise GeneratorPreconditionError(f"max_cost must be non-negative, got {max_cost}")
    density = parse_rational(edge_density)
    if not 0 <= density <= 1:
        raise GeneratorPreconditionError(f"edge density must lie in [0, 1], got {density}")

    rng = random.Random(seed)
    internal = [f"n{i}" for i in range(1, n - 1)]
    layer_of = {"s": -1}
    if internal:
        layers = _layers(rng, len(internal))
        layer_of.update(zip(internal, layers))
        layer_of["t"] = layers[-1] + 1
    else:
        layer_of["t"] = 0
    order = ["s"] + internal + ["t"]

    builder = GraphBuilder()
    builder.node(*order)
    if internal:
        pairs = _edges(rng, layer_of, order, density)
    else:
        pairs = [("s", "t")]
    for tail, head in pairs:
        builder.edge(tail, head, rng.randint(0, max_cost))
    graph = builder.build("s", "t")

    bias = parse_rational(b) if b is not None else rng.choice(BIAS_CHOICES)
    sunk = parse_rational(lam) if lam is not None else rng.choice(SUNK_CHOICES)
    optimal = shortest_path_costs(graph)["s"]
    reward = 2 * bias * optimal * Fraction(rng.randint(0, REWARD_STEPS), REWARD_STEPS)

    return Instance(
        graph=graph,
        reward=reward,
        params=AgentParams(b=bias, lam=sunk),
        declared=("bias", "sunk"),
        label=f"random n={n} seed={seed}",
        metadata={"family": "random", "seed": str(seed), "max_cost": str(max_cost)},
    )


@instance_generator("random", "Seeded layered random DAG with integer costs")
def _generate_random(options: GeneratorOptions) -> Instance:
    return random_instance(
        n=options.n or 8,
        max_cost=options.max_cost if options.max_cost is not None else 12,
        edge_density=options.density if options.density is not None else Fraction(1, 2),
        seed=options.seed if options.seed is not None else 0,
        b=options.bias,
        lam=options.sunk,
    )
