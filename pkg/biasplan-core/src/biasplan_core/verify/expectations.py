"""
Narrated behaviour of every agent kind on the hand-built fixtures.
"""

from fractions import Fraction
from typing import Callable, List, NamedTuple, Optional, Tuple

from biasplan_types import AgentKind, Instance

from ..generators import (
    deadline_fixture,
    doubly_vs_soph_fixture,
    gym_fixture,
    sing_abandons_fixture,
    sing_better_fixture,
)


class Expected(NamedTuple):
    fixture: str
    kind: AgentKind
    outcome: str
    path: Optional[Tuple[str, ...]]
    total_cost: Fraction
    payoff: Fraction
    switches: Optional[int] = None


FIXTURES: List[Tuple[str, Callable[[], Instance]]] = [
    ("gym", gym_fixture),
    ("deadline", deadline_fixture),
    ("sing-abandons", sing_abandons_fixture),
    ("sing-better", sing_better_fixture),
    ("doubly-vs-soph", doubly_vs_soph_fixture),
]

F = Fraction
K = AgentKind
_DEADLINE_SOPH = ("s", "v_1_0", "v_2_1", "v_3_2", "t")
_DEADLINE_DEFER = ("s", "v_1_0", "v_2_1", "v_3_1", "t")

EXPECTATIONS: List[Expected] = [
    Expected("gym", K.OPTIMAL, "Reached", ("s", "v", "t"), F(13), F(6)),
    Expected("gym", K.DOUBLY_NAIVE, "AbandonedAt(v)", ("s", "v"), F(1), F(-1)),
    Expected("gym", K.NAIVE_PRESENT_BIASED, "AbandonedAt(v)", ("s", "v"), F(1), F(-1)),
    Expected("gym", K.NAIVE_PRESENT_SOPH_SUNK, "AbandonedAt(v)", ("s", "v"), F(1), F(-1)),
    Expected("gym", K.SOPHISTICATED_PRESENT_BIASED, "NeverStarted", ("s",), F(0), F(0)),
    Expected("gym", K.SINGLY_SOPHISTICATED, "NeverStarted", ("s",), F(0), F(0)),
    Expected("gym", K.DOUBLY_SOPHISTICATED, "Reached", ("s", "w", "t"), F(14), F(5)),
    Expected("deadline", K.OPTIMAL, "Reached", None, F(12), F(11, 2)),
    Expected(
        "deadline", K.SOPHISTICATED_PRESENT_BIASED, "Reached", _DEADLINE_SOPH, F(12), F(11, 2)
    ),
    Expected("deadline", K.DOUBLY_NAIVE, "Reached", _DEADLINE_DEFER, F(14), F(7, 2)),
    Expected(
        "deadline",
        K.NAIVE_PRESENT_BIASED,
        "AbandonedAt(v_3_1)",
        _DEADLINE_DEFER[:-1],
        F(4),
        F(-4),
    ),
    Expected("deadline", K.DOUBLY_SOPHISTICATED, "NeverStarted", ("s",), F(0), F(0)),
    Expected(
        "deadline", K.SINGLY_SOPHISTICATED, "Reached", _DEADLINE_DEFER, F(14), F(7, 2), 1
    ),
    Expected(
        "sing-abandons", K.SINGLY_SOPHISTICATED, "AbandonedAt(u)", ("s", "u"), F(2), F(-2)
    ),
    Expected(
        "sing-abandons",
        K.SOPHISTICATED_PRESENT_BIASED,
        "Reached",
        ("s", "u", "v", "t"),
        F(9),
        F(2),
    ),
    Expected("sing-abandons", K.OPTIMAL, "Reached", ("s", "u", "v", "t"), F(9), F(2)),
    Expected(
        "sing-better", K.DOUBLY_SOPHISTICATED, "Reached", ("s", "v1", "t"), F(201, 100), F(397, 200)
    ),
    Expected(
        "sing-better",
        K.SOPHISTICATED_PRESENT_BIASED,
        "Reached",
        ("s", "v2", "t"),
        F(103, 100),
        F(593, 200),
    ),
    Expected(
        "sing-better", K.SINGLY_SOPHISTICATED, "Reached", ("s", "v2", "t"), F(103, 100), F(593, 200)
    ),
    Expected(
        "doubly-vs-soph", K.SOPHISTICATED_PRESENT_BIASED, "NeverStarted", ("s",), F(0), F(0)
    ),
    Expected(
        "doubly-vs-soph", K.DOUBLY_SOPHISTICATED, "Reached", ("s", "v", "t"), F(201, 100), F(397, 200)
    ),
    Expected(
        "doubly-vs-soph", K.OPTIMAL, "Reached", ("s", "v", "t"), F(201, 100), F(397, 200)
    ),
]
