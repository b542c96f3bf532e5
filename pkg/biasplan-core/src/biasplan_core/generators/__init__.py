from . import families, fixtures, random_dag  # noqa: F401 (registers generators)
from .builder import GraphBuilder
from .families import (
    fan_costs,
    fan_instance,
    fan_ratio,
    singly_alpha,
    singly_exponential_instance,
)
from .fixtures import (
    deadline_fixture,
    doubly_vs_soph_fixture,
    gym_fixture,
    sing_abandons_fixture,
    sing_better_fixture,
)
from .random_dag import random_instance
from .reduction import (
    default_eps,
    gadget_sequence,
    reduction_bias,
    reduction_instance,
    reduction_sidecar,
)
from .registry import (
    GENERATOR_REGISTRY,
    GeneratorOptions,
    GeneratorRegistry,
    instance_generator,
)

__all__ = [
    "GENERATOR_REGISTRY",
    "GeneratorOptions",
    "GeneratorRegistry",
    "GraphBuilder",
    "deadline_fixture",
    "default_eps",
    "doubly_vs_soph_fixture",
    "fan_costs",
    "fan_instance",
    "fan_ratio",
    "gadget_sequence",
    "gym_fixture",
    "instance_generator",
    "random_instance",
    "reduction_bias",
    "reduction_instance",
    "reduction_sidecar",
    "sing_abandons_fixture",
    "sing_better_fixture",
    "singly_alpha",
    "singly_exponential_instance",
]
