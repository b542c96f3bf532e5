from enum import Enum


class AgentKind(str, Enum):
    OPTIMAL = "optimal"
    NAIVE_PRESENT_BIASED = "naive-present-biased"
    SOPHISTICATED_PRESENT_BIASED = "sophisticated-present-biased"
    DOUBLY_NAIVE = "doubly-naive"
    SINGLY_SOPHISTICATED = "singly-sophisticated"
    DOUBLY_SOPHISTICATED = "doubly-sophisticated"
    NAIVE_PRESENT_SOPH_SUNK = "naive-present-soph-sunk"

    @classmethod
    def from_name(cls, value: str) -> "AgentKind":
        """Accept the kebab-case value or the enum member name."""
        try:
            return cls(value)
        except ValueError:
            return cls[value.upper().replace("-", "_")]

    @property
    def uses_sunk_cost(self) -> bool:
        """Whether the agent inflates its reward by lambda times the sunk cost."""
        return self not in (
            AgentKind.OPTIMAL,
            AgentKind.NAIVE_PRESENT_BIASED,
            AgentKind.SOPHISTICATED_PRESENT_BIASED,
        )
