from fractions import Fraction

import pytest

from biasplan_core.core.errors import GeneratorPreconditionError
from biasplan_core.core.graph import collect_violations, shortest_path_costs
from biasplan_core.generators import random_instance
from biasplan_core.generators.random_dag import BIAS_CHOICES, SUNK_CHOICES


def test_same_seed_same_instance():
    assert random_instance(9, 12, seed=4) == random_instance(9, 12, seed=4)


def test_two_nodes_is_a_single_edge():
    instance = random_instance(2, 5, seed=1)
    assert [(e.tail, e.head) for e in instance.graph.edges] == [("s", "t")]


@pytest.mark.parametrize("seed", range(40))
def test_sweep_is_valid(seed):
    n = 2 + seed % 11
    instance = random_instance(n, 12, Fraction(1, 3), seed=seed)
    graph = instance.graph
    assert len(graph.nodes) == n
    assert collect_violations(graph) == []
    assert all(0 <= edge.cost <= 12 and edge.cost.denominator == 1 for edge in graph.edges)
    assert instance.params.b in BIAS_CHOICES
    assert instance.params.lam in SUNK_CHOICES
    optimal = shortest_path_costs(graph)["s"]
    assert 0 <= instance.reward <= 2 * instance.params.b * optimal


def test_explicit_parameters_are_kept():
    instance = random_instance(6, 3, seed=2, b=Fraction(7, 4), lam=0)
    assert (instance.params.b, instance.params.lam) == (Fraction(7, 4), 0)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"n": 1, "max_cost": 3},
        {"n": 4, "max_cost": -1},
        {"n": 4, "max_cost": 3, "edge_density": 2},
    ],
)
def test_preconditions(kwargs):
    with pytest.raises(GeneratorPreconditionError):
        random_instance(**kwargs)
