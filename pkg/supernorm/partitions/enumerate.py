"""
Streaming enumerators for the size, perimeter, max-part and supernorm-bounded ensembles.

Streams are deterministic: size and perimeter ensembles come out in
reverse-lexicographic order of their part lists.
"""
from typing import Iterator, List, Tuple

import numpy as np

from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.partitions.model import Mode, Partition, Restriction
from supernorm.primes.sieve import PrimeTable

Pair = Tuple[int, int]


def _sum_feasible(total: int, hi: int, lo: int, distinct: bool) -> bool:
    """Can `total` be written with parts in [lo, hi]?"""
    if total == 0:
        return True
    if hi < lo or total < lo:
        return False
    if distinct:
        return total <= (hi * (hi + 1) - (lo - 1) * lo) // 2
    if lo == 1:
        return True
    if hi == lo:
        return total % lo == 0
    return total >= lo


def _by_sum(total: int, hi: int, lo: int, distinct: bool) -> Iterator[List[Pair]]:
    """Multiplicity lists with parts in [lo, hi] summing to total, reverse-lex."""
    if total == 0:
        yield []
        return
    for part in range(min(hi, total), lo - 1, -1):
        top = 1 if distinct else total // part
        for mult in range(top, 0, -1):
            rest = total - part * mult
            if not _sum_feasible(rest, part - 1, lo, distinct):
                continue
            for tail in _by_sum(rest, part - 1, lo, distinct):
                yield [(part, mult), *tail]


def _by_count(count: int, hi: int, lo: int, distinct: bool) -> Iterator[List[Pair]]:
    """Multiplicity lists of exactly `count` parts drawn from [lo, hi], reverse-lex."""
    if count == 0:
        yield []
        return
    for part in range(hi, lo - 1, -1):
        top = 1 if distinct else count
        for mult in range(top, 0, -1):
            rest = count - mult
            if rest and (part - 1 < lo or (distinct and rest > part - lo)):
                continue
            for tail in _by_count(rest, part - 1, lo, distinct):
                yield [(part, mult), *tail]


def _by_budget(budget: int, hi: int, lo: int, distinct: bool) -> Iterator[List[Pair]]:
    """All multiplicity lists with parts in [lo, hi] and total <= budget (empty first)."""
    yield []
    for part in range(min(hi, budget), lo - 1, -1):
        top = 1 if distinct else budget // part
        for mult in range(top, 0, -1):
            for tail in _by_budget(budget - part * mult, part - 1, lo, distinct):
                yield [(part, mult), *tail]


def enumerate_by_size(n: int, restriction: Restriction = Restriction.ALL) -> Iterator[Partition]:
    """Each partition of size n admitted by the restriction, once; n = 0 gives the empty partition."""
    if n < 0:
        raise InvalidArgumentError(f"size must be >= 0, got {n}")
    restriction = Restriction(restriction)
    distinct = restriction is Restriction.DISTINCT
    for pairs in _by_sum(n, n, restriction.min_part, distinct):
        yield Partition._trusted(tuple(pairs))


def enumerate_by_perimeter(
    n: int, restriction: Restriction = Restriction.ALL
) -> Iterator[Partition]:
    """Each nonempty partition with lambda_1 + r - 1 == n, once.

    For largest part m the remaining n - m parts form a multiset drawn from
    [1, m] (from [2, m] without ones, from [1, m - 1] when parts are distinct).
    """
    if n < 1:
        raise InvalidArgumentError(f"perimeter must be >= 1, got {n}")
    restriction = Restriction(restriction)
    lo = restriction.min_part
    distinct = restriction is Restriction.DISTINCT
    for m in range(n, lo - 1, -1):
        extra = n - m
        if distinct:
            for tail in _by_count(extra, m - 1, lo, True):
                yield Partition._trusted(((m, 1), *tail))
            continue
        for tail in _by_count(extra, m, lo, False):
            if tail and tail[0][0] == m:
                yield Partition._trusted(((m, tail[0][1] + 1), *tail[1:]))
            else:
                yield Partition._trusted(((m, 1), *tail))


def enumerate_by_largest_part(
    n: int,
    size_cutoff: int,
    restriction: Restriction = Restriction.ALL,
    mode: Mode = Mode.INDIVIDUAL,
) -> Iterator[Partition]:
    """Finite truncation of the max-part ensemble: size <= size_cutoff.

    Individual mode takes lambda_1 == n; cumulative takes lambda_1 <= n and
    includes the empty partition once.
    """
    if n < 0 or size_cutoff < 0:
        raise InvalidArgumentError("largest part and size cutoff must be >= 0")
    restriction = Restriction(restriction)
    lo = restriction.min_part
    distinct = restriction is Restriction.DISTINCT

    if Mode(mode) is Mode.CUMULATIVE:
        for pairs in _by_budget(size_cutoff, n, lo, distinct):
            yield Partition._trusted(tuple(pairs))
        return

    if n == 0:
        yield Partition.empty()
        return
    if n < lo:
        return
    top = 1 if distinct else size_cutoff // n
    for mult in range(1, top + 1):
        for tail in _by_budget(size_cutoff - n * mult, n - 1, lo, distinct):
            yield Partition._trusted(((n, mult), *tail))


def enumerate_by_supernorm_bound(table: PrimeTable, bound: int) -> Iterator[Partition]:
    """Every partition with N^(lambda) <= bound, once; supernorms cover 1..bound exactly."""
    if bound < 1:
        raise InvalidArgumentError(f"supernorm bound must be >= 1, got {bound}")
    if bound > table.limit:
        raise OutOfRangeError(
            f"supernorm bound {bound} needs every prime up to it; sieve stops at {table.limit}",
            required_limit=bound,
        )
    primes = table.primes

    def walk(remaining: int, max_index: int, parts: List[int]) -> Iterator[Partition]:
        yield Partition.from_parts(parts)
        top = min(max_index, int(np.searchsorted(primes, remaining, side="right")))
        for j in range(top, 0, -1):
            parts.append(j)
            yield from walk(remaining // int(primes[j - 1]), j, parts)
            parts.pop()

    yield from walk(bound, table.count, [])
