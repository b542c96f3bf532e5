from fractions import Fraction
from typing import Dict, Optional, Tuple

from typing_extensions import Self

from pydantic import Field, field_validator, model_validator

from .biasplan_base import BiasplanModel
from .graph import TaskGraph
from .rational import Number, Rational, parse_rational

DECLARABLE = ("bias", "sunk")


class AgentParams(BiasplanModel):
    """Present bias `b` and sunk-cost bias `lam` of a (b, lambda)-agent."""

    b: Rational = Field(Fraction(1), description="Present bias, at least 1")
    lam: Rational = Field(Fraction(0), description="Sunk-cost bias, at least 0")

    @field_validator("b")
    @classmethod
    def validate_bias(cls, v: Fraction) -> Fraction:
        if v < 1:
            raise ValueError(f"Present bias must be at least 1, got {v}")
        return v

    @field_validator("lam")
    @classmethod
    def validate_sunk(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError(f"Sunk-cost bias must be non-negative, got {v}")
        return v


class Instance(BiasplanModel):
    """A task graph, the reward at its target, agent parameters and provenance."""

    graph: TaskGraph
    reward: Rational
    params: AgentParams = AgentParams()
    declared: Tuple[str, ...] = Field(
        (), description="Which of `bias` / `sunk` were set explicitly"
    )
    label: str = ""
    metadata: Dict[str, str] = Field(default_factory=dict)

    @field_validator("reward")
    @classmethod
    def validate_reward(cls, v: Fraction) -> Fraction:
        if v < 0:
            raise ValueError(f"Reward must be non-negative, got {v}")
        return v

    @model_validator(mode="after")
    def check_declared(self) -> Self:
        unknown = [name for name in self.declared if name not in DECLARABLE]
        if unknown:
            raise ValueError(f"Unknown declared parameters: {unknown}")
        return self

    def with_reward(self, reward: Number) -> "Instance":
        return self.model_copy(update={"reward": parse_rational(reward)})

    def with_params(
        self, b: Optional[Number] = None, lam: Optional[Number] = None
    ) -> "Instance":
        """Copy with overridden parameters; overridden ones become declared."""
        declared = set(self.declared)
        values = self.params.model_dump()
        if b is not None:
            values["b"] = parse_rational(b)
            declared.add("bias")
        if lam is not None:
            values["lam"] = parse_rational(lam)
            declared.add("sunk")
        return self.model_copy(
            update={
                "params": AgentParams(**values),
                "declared": tuple(name for name in DECLARABLE if name in declared),
            }
        )
