"""
Ensemble cardinalities: the pentagonal-number recurrence and closed forms.
"""
import math
from enum import Enum
from functools import lru_cache
from typing import List, Union

from supernorm.core.errors import InvalidArgumentError
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Restriction


class Cardinality(str, Enum):
    """Marker for ensembles that are infinite sets."""
    INFINITE = "infinite"


INFINITE = Cardinality.INFINITE

Count = Union[int, Cardinality]


@lru_cache(maxsize=None)
def _partition_numbers(n: int) -> tuple:
    """p(0..n) by Euler's pentagonal-number recurrence."""
    p: List[int] = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return tuple(p)


def partition_count(n: int) -> int:
    """p(n), the number of partitions of n."""
    if n < 0:
        return 0
    return _partition_numbers(n)[n]


def distinct_partition_count(n: int) -> int:
    """q(n), partitions of n into distinct parts, via the product prod (1 + x^k)."""
    if n < 0:
        return 0
    q = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(n, k - 1, -1):
            q[m] += q[m - k]
    return q[n]


def _size_count(n: int, restriction: Restriction) -> int:
    if restriction is Restriction.ALL:
        return partition_count(n)
    if restriction is Restriction.NO_ONES:
        # removing all ones is a bijection onto partitions of n - m_1 without ones
        return partition_count(n) - partition_count(n - 1)
    return distinct_partition_count(n)


def _perimeter_count(n: int, restriction: Restriction) -> int:
    if n < 1:
        return 0
    if restriction is Restriction.ALL:
        return 2 ** (n - 1)
    if restriction is Restriction.NO_ONES:
        # sum over m >= 2 of C(n - 2, n - m)
        return 2 ** (n - 2) if n >= 2 else 0
    # largest part m plus n - m distinct parts below it
    return sum(math.comb(m - 1, n - m) for m in range(1, n + 1))


def _max_part_count(n: int, restriction: Restriction) -> Count:
    if n == 0:
        return 1
    if restriction is Restriction.DISTINCT:
        return 2 ** (n - 1)
    if restriction is Restriction.NO_ONES and n == 1:
        return 0
    return INFINITE


def ensemble_count(spec: EnsembleSpec, n: int) -> Count:
    """Cardinality of the ensemble at n (cumulative: union over indices <= n plus the empty partition)."""
    if n < 0:
        raise InvalidArgumentError(f"ensemble index must be >= 0, got {n}")
    restriction = spec.restriction

    if spec.ensemble is Ensemble.SIZE:
        if spec.mode is Mode.INDIVIDUAL:
            return _size_count(n, restriction)
        return sum(_size_count(k, restriction) for k in range(n + 1))

    if spec.ensemble is Ensemble.PERIMETER:
        if spec.mode is Mode.INDIVIDUAL:
            return _perimeter_count(n, restriction)
        return 1 + sum(_perimeter_count(k, restriction) for k in range(1, n + 1))

    if spec.mode is Mode.INDIVIDUAL:
        return _max_part_count(n, restriction)
    counts = [_max_part_count(k, restriction) for k in range(n + 1)]
    if any(c is INFINITE for c in counts):
        return INFINITE
    return sum(counts)  # type: ignore[arg-type]
