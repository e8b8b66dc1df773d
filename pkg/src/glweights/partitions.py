"""Integer-partition counting: p(n), the min-part-2 and admissible refinements,
the lower-bound count for the weight-system image, Hardy-Ramanujan estimates,
and the dimension upper bounds in the Casimir variables.

Partitions are tuples of weakly increasing positive parts.  A partition of n
with parts >= 2 is called admissible when n minus its largest part is even.
Counting functions use recurrence tables (enumerating would be hopeless at
n = 500); the test suite re-derives the small values by brute enumeration.
"""

from __future__ import annotations

import math
from typing import Iterator, NamedTuple

_PI_SQRT_2_3 = math.pi * math.sqrt(2.0 / 3.0)

_p_cache = [1]


def partition_count(n: int) -> int:
    """p(n), by the pentagonal-number recurrence over exact integers."""
    if n < 0:
        return 0
    while len(_p_cache) <= n:
        m = len(_p_cache)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            g2 = k * (3 * k + 1) // 2
            term = _p_cache[m - g1] + (_p_cache[m - g2] if g2 <= m else 0)
            total += term if k % 2 else -term
            k += 1
        _p_cache.append(total)
    return _p_cache[n]


def partition_count_min2(n: int) -> int:
    """Number of partitions of n with every part >= 2: p(n) - p(n-1)."""
    if n < 0:
        return 0
    return partition_count(n) - partition_count(n - 1)


def ascending_partitions(n: int, min_part: int = 1) -> Iterator[tuple[int, ...]]:
    """Lazily yield the partitions of n with parts >= min_part, ascending."""
    if n < 0:
        raise ValueError("n must be non-negative")

    def rec(remaining: int, lo: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for part in range(lo, remaining // 2 + 1):
            yield from rec(remaining - part, part, prefix + (part,))
        if remaining >= lo:
            yield prefix + (remaining,)

    yield from rec(n, min_part, ())


_min2_tables: dict[int, list[list[int]]] = {}


def _min2_table(limit: int) -> list[list[int]]:
    # table[x][m] = number of partitions of x into parts from {2, ..., m}
    for size in _min2_tables:
        if size >= limit:
            return _min2_tables[size]
    table = [[0] * (limit + 1) for _ in range(limit + 1)]
    for m in range(limit + 1):
        table[0][m] = 1
    for m in range(2, limit + 1):
        for x in range(1, limit + 1):
            table[x][m] = table[x][m - 1] + (table[x - m][m] if x >= m else 0)
    _min2_tables.clear()
    _min2_tables[limit] = table
    return table


def admissible_count(n: int) -> int:
    """Partitions of n with parts >= 2 whose largest part has the parity of n.

    The empty partition makes the count 1 at n = 0 (parity holds vacuously)
    and 0 at n = 1, which keeps the identities with partition_count_min2
    true at the boundary.
    """
    if n < 0:
        return 0
    if n == 0:
        return 1
    table = _min2_table(n)
    # split by the largest part m: one part m plus a remainder with parts <= m
    return sum(table[n - m][m] for m in range(2, n + 1) if (n - m) % 2 == 0)


def is_admissible(parts: tuple[int, ...]) -> bool:
    if not parts:
        return True
    return min(parts) >= 2 and (sum(parts) - parts[-1]) % 2 == 0


def to_admissible(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Injective map from non-admissible partitions (parts >= 2) to admissible ones.

    Takes the first part >= 3 (everything before it is a 2), lowers it by one
    and raises the largest part by one; the sum is preserved and the result
    is admissible.
    """
    parts = tuple(parts)
    if any(x > y for x, y in zip(parts, parts[1:])):
        raise ValueError("parts must be weakly increasing")
    if parts and parts[0] < 2:
        raise ValueError("parts must all be >= 2")
    if is_admissible(parts):
        raise ValueError("partition is already admissible")
    pivot = next(i for i, x in enumerate(parts) if x >= 3)
    moved = parts[:pivot] + (parts[pivot] - 1,) + parts[pivot + 1:-1] + (parts[-1] + 1,)
    return tuple(sorted(moved))


def conjugate_partition(parts: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram, again with weakly increasing parts."""
    parts = tuple(parts)
    if any(x > y for x, y in zip(parts, parts[1:])):
        raise ValueError("parts must be weakly increasing")
    if not parts:
        return ()
    largest = parts[-1]
    return tuple(sum(1 for x in parts if x >= i) for i in range(largest, 0, -1))


def lower_bound_count(n: int) -> int:
    """Partitions of n + 2 with parts >= 2 whose largest part p_r has n - p_r even.

    Since (n + 2) - p_r and n - p_r have the same parity this equals
    admissible_count(n + 2); it is the dimension lower bound certified by the
    independent bridge-diagram families in degree n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    return admissible_count(n + 2)


def estimate_partition_count(n: int) -> float:
    """Hardy-Ramanujan asymptotic e^(pi sqrt(2n/3)) / (4 n sqrt(3))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.exp(_PI_SQRT_2_3 * math.sqrt(n)) / (4.0 * n * math.sqrt(3.0))


def estimate_partition_count_min2(n: int) -> float:
    """Asymptotic for min-part-2 partitions: pi sqrt(2) / (24 n sqrt(n)) e^(pi sqrt(2n/3))."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.pi * math.sqrt(2.0) / (24.0 * n * math.sqrt(n)) * math.exp(_PI_SQRT_2_3 * math.sqrt(n))


_at_most_tables: dict[int, list[list[int]]] = {}


def _at_most_table(limit: int) -> list[list[int]]:
    # table[r][m] = number of partitions of m into at most r positive parts
    for size in _at_most_tables:
        if size >= limit:
            return _at_most_tables[size]
    table = [[0] * (limit + 1) for _ in range(limit + 1)]
    for r in range(limit + 1):
        table[r][0] = 1
    for r in range(1, limit + 1):
        for m in range(1, limit + 1):
            table[r][m] = table[r - 1][m] + (table[r][m - r] if m >= r else 0)
    _at_most_tables.clear()
    _at_most_tables[limit] = table
    return table


def count_weight_monomials(n: int) -> int:
    """Number of monomials c_{j_1}...c_{j_r} with 0 <= j_1 <= ... <= j_r,
    sum <= n and 0 <= r <= n (the empty monomial counts).

    A length-r tuple with zeros allowed is a partition of its positive part
    into at most r parts, so the count is a double sum over the at-most table.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    table = _at_most_table(n)
    return sum(table[r][m] for r in range(n + 1) for m in range(n + 1))


class BoundReport(NamedTuple):
    n: int
    monomials: int
    square_bound: int
    square_ok: bool
    cumulative: int
    cube_bound: int
    cube_ok: bool


def dimension_bound_report(n: int) -> BoundReport:
    """Check count_weight_monomials(n) <= n^2 p(n) and its cumulative variant.

    The cumulative sum over count_weight_monomials(n - k), k = 0..n, is
    compared against n^3 p(n).  Both inequalities hold from n = 2 on; at
    n = 1 the counts (3 monomials, cumulative 4) exceed the bounds (1), so
    the report is the honest place to observe that boundary failure.
    """
    monomials = count_weight_monomials(n)
    cumulative = sum(count_weight_monomials(n - k) for k in range(n + 1))
    square_bound = n * n * partition_count(n)
    cube_bound = n * n * n * partition_count(n)
    return BoundReport(
        n, monomials, square_bound, monomials <= square_bound,
        cumulative, cube_bound, cumulative <= cube_bound,
    )
