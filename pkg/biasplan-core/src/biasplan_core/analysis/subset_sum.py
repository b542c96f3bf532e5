from typing import List, Optional, Sequence, Set, Tuple

from biasplan_types import SubsetSumInstance


def find_subset(xs: Sequence[int], target: int) -> Optional[Tuple[int, ...]]:
    """
    Indices of a subset of `xs` summing to `target`, or None.

    The witness prefers later elements: from the last index down, an
    element is taken whenever the rest of the target stays reachable with
    the elements before it. Read from the largest index down, it is the
    greatest witness. A target of 0 gives the empty tuple.
    """
    if target < 0:
        return None
    # reachable[i] holds every sum of a subset of xs[:i] up to target
    reachable: List[Set[int]] = [{0}]
    for x in xs:
        previous = reachable[-1]
        reachable.append(previous | {s + x for s in previous if s + x <= target})
    if target not in reachable[-1]:
        return None

    chosen: List[int] = []
    remaining = target
    for index in range(len(xs), 0, -1):
        x = xs[index - 1]
        if remaining >= x and remaining - x in reachable[index - 1]:
            chosen.append(index - 1)
            remaining -= x
    return tuple(sorted(chosen))


def subset_sum_oracle(ss: SubsetSumInstance) -> Optional[Tuple[int, ...]]:
    return find_subset(ss.xs, ss.target)


def witness_values(xs: Sequence[int], witness: Tuple[int, ...]) -> List[int]:
    return [xs[index] for index in witness]
