"""
This module contains bounded integer searches shared by the lattice code.
"""

import math
from collections import Counter
from typing import Iterator, Sequence


def bounded_vectors(
    length: int,
    total: int,
    square_total: int,
    *,
    low: int,
    high: int,
    non_increasing: bool = False,
) -> Iterator[tuple[int, ...]]:
    """
    Enumerate integer vectors with a prescribed sum and sum of squares.

    Every entry lies in `[low, high]`.
    Branches are pruned with the Cauchy-Schwarz bound,
    so the search never visits the whole box.

    Args:
        length (int): Number of entries.
        total (int): Required sum of the entries.
        square_total (int): Required sum of the squared entries.
        low (int): Smallest allowed entry.
        high (int): Largest allowed entry.
        non_increasing (bool): Only yield sorted, non-increasing vectors.

    Yields:
        vector (tuple[int, ...]): Solutions, in lexicographic order.
    """
    if length < 0:
        raise ValueError(f"length must be non-negative, got {length}")
    if _feasible(length, total, square_total, low, high):
        yield from _extend(
            (), length, total, square_total, low, high, non_increasing
        )


def _feasible(
    slots: int, total: int, square_total: int, low: int, high: int
) -> bool:
    if slots == 0:
        return total == 0 and square_total == 0
    if low > high or square_total < 0:
        return False
    if not slots * low <= total <= slots * high:
        return False
    if slots * square_total < total * total:
        return False
    return square_total <= slots * max(low * low, high * high)


def _extend(
    prefix: tuple[int, ...],
    slots: int,
    total: int,
    square_total: int,
    low: int,
    high: int,
    non_increasing: bool,
) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        yield prefix
        return
    for value in range(low, high + 1):
        next_high = value if non_increasing else high
        rest_total = total - value
        rest_squares = square_total - value * value
        if _feasible(slots - 1, rest_total, rest_squares, low, next_high):
            yield from _extend(
                prefix + (value,),
                slots - 1,
                rest_total,
                rest_squares,
                low,
                next_high,
                non_increasing,
            )


def orbit_size(values: Sequence[int]) -> int:
    """
    Count the distinct permutations of a sequence.

    Args:
        values (Sequence[int]): The entries to permute.

    Returns:
        size (int): `len(values)!` divided by the multiplicity factorials.
    """
    size = math.factorial(len(values))
    for multiplicity in Counter(values).values():
        size //= math.factorial(multiplicity)
    return size


def bounded_partitions(
    total: int, parts: int, largest: int
) -> Iterator[tuple[int, ...]]:
    """
    Enumerate non-increasing tuples of `parts` integers in `[0, largest]`
    summing to `total`. Zeros pad the tail.

    Yields:
        partition (tuple[int, ...]): Largest parts first.
    """
    if parts == 0:
        if total == 0:
            yield ()
        return
    if total < 0 or total > parts * largest:
        return
    lowest_first = -(-total // parts)
    for first in range(min(largest, total), lowest_first - 1, -1):
        for rest in bounded_partitions(total - first, parts - 1, first):
            yield (first,) + rest
