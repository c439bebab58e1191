"""Generation and counting of partitions of n.

All streams yield partitions in descending lexicographic order, e.g. for n=4:
(4), (3,1), (2,2), (2,1,1), (1,1,1,1).
"""

from __future__ import annotations

from typing import Callable, Iterator

from .partition import (
    EMPTY,
    Partition,
    ResiduePermutation,
    check_gap,
    is_d_distinct,
    is_distinct,
    satisfies_conditions,
)

Predicate = Callable[[Partition], bool]


def partitions_of(n: int) -> Iterator[Partition]:
    """Every partition of ``n`` exactly once. ``n=0`` yields only the empty partition."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield EMPTY
        return
    # Iterative successor rule for reverse-lex order: find the rightmost part
    # greater than 1, decrement it, and redistribute what follows greedily.
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        k = parts[-1] - 1
        parts[-1] = k
        rest = ones + 1
        q, r = divmod(rest, k)
        parts.extend([k] * q)
        if r:
            parts.append(r)


def count(n: int, predicate: Predicate | None = None) -> int:
    """Number of partitions of ``n`` satisfying ``predicate`` (all of them if ``None``)."""
    if predicate is None:
        return sum(1 for _ in partitions_of(n))
    return sum(1 for lam in partitions_of(n) if predicate(lam))


def d_distinct_partitions(n: int, d: int) -> Iterator[Partition]:
    check_gap(d)
    return (lam for lam in partitions_of(n) if is_d_distinct(lam, d))


def target_partitions(n: int, pi: ResiduePermutation) -> Iterator[Partition]:
    """Partitions of ``n`` that are 1-distinct and meet every threshold condition of ``pi``."""
    return (lam for lam in partitions_of(n) if satisfies_conditions(lam, pi))


# Closed predicate vocabulary exposed to the CLI.

def even_part_count(lam: Partition) -> bool:
    return len(lam) % 2 == 0


def all_odd(lam: Partition) -> bool:
    return all(x % 2 for x in lam.parts)


def at_most_m_parts(m: int) -> Predicate:
    return lambda lam: len(lam) <= m


def parts_at_most_m(m: int) -> Predicate:
    return lambda lam: lam.largest <= m


def d_distinct(d: int) -> Predicate:
    check_gap(d)
    return lambda lam: is_d_distinct(lam, d)


def meets_conditions(pi: ResiduePermutation) -> Predicate:
    return lambda lam: satisfies_conditions(lam, pi)


PREDICATES: dict[str, Predicate] = {
    "all-distinct": is_distinct,
    "all-odd": all_odd,
    "even-part-count": even_part_count,
}
