"""
Segmented sieve of Eratosthenes and the immutable prime table built from it.

The table stores primes 0-based in a read-only numpy array but is queried
1-based: nth_prime(table, 1) == 2, and nth_prime(table, 0) == 1 by convention.
"""
import math
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from supernorm.core.config import settings
from supernorm.core.errors import (
    CacheFormatError,
    InvalidArgumentError,
    OutOfRangeError,
    ResourceLimitError,
)
from supernorm.core.logging import get_logger

logger = get_logger(__name__)

CACHE_MAGIC = b"PTBLv001"
_HEADER = struct.Struct("<8sQ")


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes up to `limit`, sorted ascending."""

    limit: int
    primes: np.ndarray

    @property
    def count(self) -> int:
        return int(self.primes.shape[0])

    @property
    def largest(self) -> int:
        return int(self.primes[-1]) if self.count else 1

    def __len__(self) -> int:
        return self.count

    def __contains__(self, m: object) -> bool:
        return isinstance(m, (int, np.integer)) and is_prime(self, int(m))

    def __repr__(self) -> str:
        return f"PrimeTable(limit={self.limit}, count={self.count})"


def _simple_sieve(limit: int) -> np.ndarray:
    """Plain sieve for the base primes up to sqrt(limit)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime_mask = np.ones(limit + 1, dtype=bool)
    is_prime_mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime_mask[p]:
            is_prime_mask[p * p :: p] = False
    return np.flatnonzero(is_prime_mask).astype(np.int64)


def estimate_prime_count(limit: int) -> int:
    """Upper estimate of pi(limit), good enough for sizing buffers."""
    if limit < 17:
        return 7
    return int(1.26 * limit / math.log(limit)) + 1


def nth_prime_upper_estimate(n: int) -> int:
    """An integer x with p_n <= x, from n(log n + log log n) for n >= 6."""
    if n < 6:
        return 13
    ln = math.log(n)
    return int(math.ceil(n * (ln + math.log(ln)))) + 1


def _check_memory_budget(limit: int, segment_size: int) -> None:
    budget_bytes = settings.SIEVE_MEMORY_BUDGET_MB * 1024 * 1024
    needed = 8 * estimate_prime_count(limit) + min(segment_size, limit // 2 + 1)
    needed += 8 * estimate_prime_count(math.isqrt(limit) + 1)
    if needed > budget_bytes:
        raise ResourceLimitError(
            f"sieve limit {limit} needs ~{needed // (1024 * 1024)} MB, over the "
            f"SIEVE_MEMORY_BUDGET_MB budget of {settings.SIEVE_MEMORY_BUDGET_MB} MB"
        )


def build_prime_table(limit: int, segment_size: Optional[int] = None) -> PrimeTable:
    """Sieve all primes <= limit with an odd-only segmented sieve."""
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    segment_size = segment_size or settings.SIEVE_SEGMENT_SIZE
    if segment_size < 1:
        raise InvalidArgumentError(f"segment size must be positive, got {segment_size}")
    _check_memory_budget(limit, segment_size)

    logger.info("Building prime table", limit=limit, segment_size=segment_size)

    base = _simple_sieve(math.isqrt(limit) + 1)
    odd_base = base[base > 2]
    chunks = [np.array([2], dtype=np.int64)]

    span = 2 * segment_size
    low = 3
    while low <= limit:
        high = min(low + span, limit + 1)  # exclusive
        odd_count = (high - low + 1) // 2
        mask = np.ones(odd_count, dtype=bool)
        for p in odd_base:
            p = int(p)
            p2 = p * p
            if p2 >= high:
                break
            start = max(p2, ((low + p - 1) // p) * p)
            if start % 2 == 0:
                start += p
            if start >= high:
                continue
            mask[(start - low) // 2 :: p] = False
        idx = np.flatnonzero(mask)
        if idx.size:
            chunks.append(low + 2 * idx.astype(np.int64))
        low = high if high % 2 == 1 else high + 1

    primes = np.concatenate(chunks)
    primes = primes[primes <= limit]
    primes.setflags(write=False)

    table = PrimeTable(limit=limit, primes=primes)
    logger.info("Prime table built", limit=limit, count=table.count)
    return table


def nth_prime(table: PrimeTable, n: int) -> int:
    """Return p_n, with p_0 = 1."""
    if n < 0:
        raise InvalidArgumentError(f"prime index must be >= 0, got {n}")
    if n == 0:
        return 1
    if n > table.count:
        raise OutOfRangeError(
            f"p_{n} is beyond the sieve (limit {table.limit} holds {table.count} primes)",
            required_limit=nth_prime_upper_estimate(n),
        )
    return int(table.primes[n - 1])


def prime_count_upto(table: PrimeTable, x: Union[int, float]) -> int:
    """pi(x) for x <= table.limit."""
    if x > table.limit:
        raise OutOfRangeError(
            f"x={x} exceeds the sieve limit {table.limit}", required_limit=int(math.ceil(x))
        )
    return int(np.searchsorted(table.primes, math.floor(x), side="right"))


def is_prime(table: PrimeTable, m: int) -> bool:
    """Membership test backed by binary search over the table."""
    if m > table.limit:
        raise OutOfRangeError(f"{m} exceeds the sieve limit {table.limit}", required_limit=m)
    if m < 2:
        return False
    i = int(np.searchsorted(table.primes, m))
    return i < table.count and int(table.primes[i]) == m


def prime_index(table: PrimeTable, p: int) -> int:
    """Inverse of nth_prime: the n with p_n == p (0 for p == 1)."""
    if p == 1:
        return 0
    if not is_prime(table, p):
        raise InvalidArgumentError(f"{p} is not prime")
    return int(np.searchsorted(table.primes, p)) + 1


def save_prime_table(table: PrimeTable, path: Union[str, Path]) -> Path:
    """Write the PTBLv001 cache: magic, 64-bit limit, little-endian 64-bit primes."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "wb") as fh:
        fh.write(_HEADER.pack(CACHE_MAGIC, table.limit))
        fh.write(table.primes.astype("<u8").tobytes())
    logger.info("Prime table cached", path=str(path), limit=table.limit, count=table.count)
    return path


def load_prime_table(path: Union[str, Path]) -> PrimeTable:
    """Read and validate a PTBLv001 cache."""
    path = Path(path)
    data = path.read_bytes()
    if len(data) < _HEADER.size:
        raise CacheFormatError(f"{path}: truncated header")
    magic, limit = _HEADER.unpack_from(data)
    if magic != CACHE_MAGIC:
        raise CacheFormatError(f"{path}: bad magic {magic!r}, expected {CACHE_MAGIC!r}")
    body = data[_HEADER.size :]
    if len(body) % 8:
        raise CacheFormatError(f"{path}: body is not a whole number of 64-bit words")

    primes = np.frombuffer(body, dtype="<u8").astype(np.int64)
    if primes.size == 0 or primes[0] != 2:
        raise CacheFormatError(f"{path}: table must start at 2")
    if np.any(np.diff(primes) <= 0):
        raise CacheFormatError(f"{path}: primes are not strictly increasing")
    if int(primes[-1]) > limit:
        raise CacheFormatError(f"{path}: prime {int(primes[-1])} exceeds stored limit {limit}")
    primes.setflags(write=False)

    logger.info("Prime table loaded", path=str(path), limit=limit, count=int(primes.size))
    return PrimeTable(limit=int(limit), primes=primes)


def cache_path_for(limit: int, cache_dir: Optional[Path] = None) -> Optional[Path]:
    cache_dir = cache_dir or settings.SIEVE_CACHE_DIR
    if cache_dir is None:
        return None
    return Path(cache_dir) / f"primes_{limit}.ptbl"


def cached_prime_table(
    limit: int, cache_dir: Optional[Path] = None, store: bool = True
) -> PrimeTable:
    """Load the table from SIEVE_CACHE_DIR when present, else sieve (and store it when asked)."""
    path = cache_path_for(limit, cache_dir)
    if path is not None and path.exists():
        try:
            table = load_prime_table(path)
            if table.limit == limit:
                return table
        except CacheFormatError as e:
            logger.warning("Ignoring invalid prime cache", path=str(path), error=str(e))

    table = build_prime_table(limit)
    if store and path is not None:
        save_prime_table(table, path)
    return table
