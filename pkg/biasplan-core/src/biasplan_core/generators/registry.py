"""
Generator registration by decorator.

Functions decorated with @instance_generator("name") are stored in
GENERATOR_REGISTRY and become available to `biasplan generate name`. Each
registered function receives the validated GeneratorOptions and picks the
options it understands, falling back to its own defaults.
"""

from typing import Callable, Dict, List, Optional

from biasplan_types import Instance, Rational
from pydantic import BaseModel, ConfigDict, Field

from ..core.errors import BiasplanError


class GeneratorOptions(BaseModel):
    """Name-specific generator flags; unset ones are None."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True, frozen=True)

    bias: Optional[Rational] = Field(None, description="Present bias b")
    sunk: Optional[Rational] = Field(None, description="Sunk-cost bias lambda")
    reward: Optional[Rational] = None
    eps: Optional[Rational] = None
    y0: Optional[Rational] = None
    n: Optional[int] = Field(None, ge=1)
    seed: Optional[int] = None
    max_cost: Optional[int] = Field(None, ge=0)
    density: Optional[Rational] = None


GeneratorFunction = Callable[[GeneratorOptions], Instance]


class GeneratorRegistry:
    """Mapping generator name -> (function, one-line description)."""

    def __init__(self):
        self._generators: Dict[str, GeneratorFunction] = {}
        self._descriptions: Dict[str, str] = {}

    def register(self, name: str, description: str = "") -> Callable:
        def decorator(function: GeneratorFunction) -> GeneratorFunction:
            self._generators[name] = function
            self._descriptions[name] = description
            return function

        return decorator

    def generator_exists(self, name: str) -> bool:
        return name in self._generators

    def generate(self, name: str, options: Optional[GeneratorOptions] = None) -> Instance:
        if name not in self._generators:
            raise BiasplanError(
                f"Generator '{name}' not found. Available: {', '.join(self.names())}"
            )
        return self._generators[name](options or GeneratorOptions())

    def names(self) -> List[str]:
        return sorted(self._generators)

    def list(self) -> List[Dict[str, str]]:
        return [
            {"name": name, "description": self._descriptions[name]}
            for name in self.names()
        ]


GENERATOR_REGISTRY = GeneratorRegistry()


def instance_generator(name: str, description: str = "") -> Callable:
    """Register a GeneratorOptions -> Instance function under `name`."""
    return GENERATOR_REGISTRY.register(name, description)
