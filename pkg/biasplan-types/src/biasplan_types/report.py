from typing import Dict, Tuple

from .agent_kind import AgentKind
from .biasplan_base import BiasplanModel
from .rational import Rational


class BoundCheck(BiasplanModel):
    """`observed <= bound`, with the verdict stored next to the numbers."""

    name: str
    bound: Rational
    observed: Rational
    holds: bool

    @classmethod
    def compare(cls, name: str, observed, bound) -> "BoundCheck":
        return cls(name=name, bound=bound, observed=observed, holds=observed <= bound)

    def recheck(self) -> bool:
        """Recompute the verdict from the numbers and compare with the stored flag."""
        return (self.observed <= self.bound) == self.holds


class GapReport(BiasplanModel):
    label: str
    payoffs: Dict[AgentKind, Rational]
    optimal_cost: Rational
    checks: Tuple[BoundCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(check.holds and check.recheck() for check in self.checks)

    @property
    def violations(self) -> Tuple[BoundCheck, ...]:
        return tuple(
            check for check in self.checks if not (check.holds and check.recheck())
        )
