import math
from fractions import Fraction
from typing import List, Tuple

from pydantic import Field, field_validator

from .biasplan_base import BiasplanModel
from .rational import Rational


class SubsetSumInstance(BiasplanModel):
    """Positive integers `xs` and a target `T`."""

    xs: Tuple[int, ...]
    target: int = Field(..., description="The target sum T")

    @field_validator("xs")
    @classmethod
    def validate_xs(cls, v: Tuple[int, ...]) -> Tuple[int, ...]:
        if not v:
            raise ValueError("A subset-sum instance needs at least one integer")
        if any(x < 1 for x in v):
            raise ValueError(f"Every integer must be at least 1, got {list(v)}")
        return v

    @field_validator("target")
    @classmethod
    def validate_target(cls, v: int) -> int:
        if v < 1:
            raise ValueError(f"Target must be at least 1, got {v}")
        return v


class GadgetSequence(BiasplanModel):
    """Edge costs of the doubling chain that stands for one integer `x`."""

    x: int
    b: Rational
    costs: Tuple[Rational, ...]

    @property
    def length_bound(self) -> int:
        return math.ceil(math.log2(6 * self.x + 1)) + 2

    def violations(self) -> List[str]:
        """Every broken structural property, empty when the chain is well formed."""
        problems: List[str] = []
        half = 1 / (2 * self.b)
        costs = self.costs
        if len(costs) < 2 or costs[0] != half or costs[1] != half:
            problems.append(f"chain must start with two edges of cost {half}")
        for position in range(2, len(costs) - 1):
            if costs[position] != 2 * costs[position - 1]:
                problems.append(f"entry {position} is not twice its predecessor")
        if len(costs) >= 2 and not 0 < costs[-1] <= 2 * costs[-2]:
            problems.append("last entry must be positive and at most twice the one before")
        if sum(costs, Fraction(0)) != self.x:
            problems.append(f"entries sum to {sum(costs, Fraction(0))}, not {self.x}")
        if len(costs) > self.length_bound:
            problems.append(
                f"{len(costs)} edges exceed the bound of {self.length_bound}"
            )
        return problems
