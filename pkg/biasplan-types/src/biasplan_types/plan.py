from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from pydantic import PrivateAttr

from .biasplan_base import BiasplanModel
from .rational import Cost, Rational, is_infinite
from .trace import TraversalTrace


class PlanEntry(BiasplanModel):
    """Decision of a sophisticated present-biased plan at one node.

    `edge_id` is None at the target (continuation 0) and at Abandon nodes
    (continuation infinite).
    """

    node: str
    edge_id: Optional[str] = None
    continuation: Cost

    @property
    def abandoned(self) -> bool:
        return is_infinite(self.continuation)


class PlanTable(BiasplanModel):
    """Per-node plan of a (b, 0)-sophisticated agent facing perceived reward `rho`."""

    rho: Rational
    b: Rational
    entries: Dict[str, PlanEntry]

    def entry(self, node: str) -> PlanEntry:
        return self.entries[node]

    def is_abandon(self, node: str) -> bool:
        return self.entries[node].abandoned


class PolicyState(BiasplanModel):
    """Decision of a doubly sophisticated agent at (node, sunk cost)."""

    node: str
    sunk_cost: Rational
    edge_id: Optional[str] = None
    continuation: Cost

    @property
    def abandoned(self) -> bool:
        return is_infinite(self.continuation)

    @property
    def key(self) -> Tuple[str, Fraction]:
        return (self.node, self.sunk_cost)


class PolicyTable(BiasplanModel):
    """Decision map keyed by (node, sunk cost), computed for one (R, b, lambda)."""

    reward: Rational
    b: Rational
    lam: Rational
    states: Tuple[PolicyState, ...]

    _index: Dict[Tuple[str, Fraction], PolicyState] = PrivateAttr(
        default_factory=dict
    )

    def model_post_init(self, __context: Any) -> None:
        for state in self.states:
            self._index[state.key] = state

    def get(self, node: str, sunk_cost: Fraction) -> Optional[PolicyState]:
        return self._index.get((node, sunk_cost))

    def __contains__(self, key: Tuple[str, Fraction]) -> bool:
        return key in self._index

    def __len__(self) -> int:
        return len(self.states)


class DoublySophResult(BiasplanModel):
    trace: TraversalTrace
    policy: PolicyTable
    started: bool
