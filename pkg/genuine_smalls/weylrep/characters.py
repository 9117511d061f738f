"""
Character values of the symmetric and hyperoctahedral groups by the Murnaghan-Nakayama rule,
computed on beta-numbers.

For the hyperoctahedral group an element is described by its signed cycle type; removing a
hook for a negative cycle from the second partition contributes an extra sign.
"""

from functools import lru_cache
from typing import List, Tuple

from .labels import Partition

__all__ = ["rim_hook_removals", "symmetric_character", "hyperoctahedral_character"]


def rim_hook_removals(p: Partition, k: int) -> List[Tuple[Partition, int]]:
    """
    All partitions obtained from `p` by removing a rim hook of length `k`, with the sign
    ``(-1)^(height)`` of each hook.

    :param p: A partition.
    :type p: Partition
    :param k: The hook length.
    :type k: int
    :return: Pairs of remaining partition and sign.
    :rtype: List[Tuple[Partition, int]]
    """
    length = len(p)
    beta = [part + (length - 1 - i) for i, part in enumerate(p)]
    present = set(beta)
    out = []
    for b in beta:
        c = b - k
        if c < 0 or c in present:
            continue
        crossed = sum(1 for x in beta if c < x < b)
        moved = sorted([x for x in beta if x != b] + [c], reverse=True)
        parts = tuple(
            x for x in (y - (length - 1 - i) for i, y in enumerate(moved)) if x > 0
        )
        out.append((parts, -1 if crossed % 2 else 1))
    return out


@lru_cache(maxsize=None)
def symmetric_character(lam: Partition, cycle_type: Tuple[int, ...]) -> int:
    """
    The value of the irreducible character ``lam`` of the symmetric group on an element of the
    given cycle type. ``(n,)`` is the trivial character.
    """
    if not cycle_type:
        return 1 if not lam else 0
    k, rest = cycle_type[0], cycle_type[1:]
    return sum(
        sign * symmetric_character(smaller, rest)
        for smaller, sign in rim_hook_removals(lam, k)
    )


@lru_cache(maxsize=None)
def hyperoctahedral_character(
    alpha: Partition,
    beta: Partition,
    positive: Tuple[int, ...],
    negative: Tuple[int, ...],
) -> int:
    """
    The value of the irreducible character ``(alpha; beta)`` of the hyperoctahedral group on an
    element with positive cycles `positive` and negative cycles `negative`.
    """
    if not positive and not negative:
        return 1 if not alpha and not beta else 0
    if positive:
        k, sign = positive[0], 1
        positive = positive[1:]
    else:
        k, sign = negative[0], -1
        negative = negative[1:]
    total = 0
    for smaller, s in rim_hook_removals(alpha, k):
        total += s * hyperoctahedral_character(smaller, beta, positive, negative)
    for smaller, s in rim_hook_removals(beta, k):
        total += s * sign * hyperoctahedral_character(alpha, smaller, positive, negative)
    return total
