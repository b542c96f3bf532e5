from .doubly_soph import (
    brute_force,
    check_policy_table,
    dp_integer,
    dump_policy,
    min_reward,
    policy_path,
    policy_rule,
    recursive_states,
)

__all__ = [
    "brute_force",
    "check_policy_table",
    "dp_integer",
    "dump_policy",
    "min_reward",
    "policy_path",
    "policy_rule",
    "recursive_states",
]
