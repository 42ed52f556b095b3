"""
Large-n window for C^_max(n) = prod_{j <= n} p_j/(p_j - 1):

    -1/(log n)^2 <= C^_max(n) - e^gamma (log n + log log n) <= 2 log log n / log n

for every n with p_n >= 2,278,383.
"""
import math
from typing import Tuple

import numpy as np

from supernorm.core.config import limits
from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.core.numeric import CompensatedSum
from supernorm.core.logging import get_logger
from supernorm.primes.bounds import BoundReport, MarginTracker
from supernorm.primes.mertens import MathConstants, constants
from supernorm.primes.sieve import PrimeTable, nth_prime, nth_prime_upper_estimate

logger = get_logger(__name__)

_BLOCK = 4096


def log_c_hat_max_prefix(table: PrimeTable, hi: int) -> np.ndarray:
    """log C^_max(n) for n = 1..hi as an array indexed by n - 1.

    Block totals are carried in a compensated accumulator and only the
    within-block partial sums use plain cumulative summation.
    """
    if hi > table.count:
        raise OutOfRangeError(
            f"n={hi} needs p_{hi}, beyond the sieve's {table.count} primes",
            required_limit=nth_prime_upper_estimate(hi),
        )
    terms = -np.log1p(-1.0 / table.primes[:hi].astype(np.float64))
    out = np.empty(hi)
    carry = CompensatedSum()
    for start in range(0, hi, _BLOCK):
        block = terms[start : start + _BLOCK]
        out[start : start + block.size] = carry.value + np.cumsum(block)
        carry.add(math.fsum(block.tolist()))
    return out


def mertens_window_check(
    table: PrimeTable,
    n_range: Tuple[int, int],
    consts: MathConstants = constants,
) -> BoundReport:
    """Scan the two-sided window over n_range; the margin is the smaller slack."""
    lo, hi = n_range
    if lo > hi:
        raise InvalidArgumentError(f"empty n range [{lo}, {hi}]")
    p_lo = nth_prime(table, lo)
    if p_lo < limits.mertens_threshold:
        raise InvalidArgumentError(
            f"window needs p_n >= {limits.mertens_threshold:,}; p_{lo} = {p_lo}"
        )
    logger.info("Scanning C^_max window", lo=lo, hi=hi)

    log_values = log_c_hat_max_prefix(table, hi)[lo - 1 :]
    n = np.arange(lo, hi + 1, dtype=np.int64)
    ln = np.log(n.astype(np.float64))
    lln = np.log(ln)
    residual = np.exp(log_values) - consts.e_gamma_f * (ln + lln)
    margins = np.minimum(residual + 1.0 / (ln * ln), 2.0 * lln / ln - residual)

    tracker = MarginTracker("c-hat-max-window", (lo, hi))
    tracker.update_array(margins, n)
    return tracker.report()


def first_index_above(table: PrimeTable, threshold: int) -> int:
    """Smallest n with p_n >= threshold."""
    if threshold > table.largest:
        raise OutOfRangeError(
            f"no prime >= {threshold} below the sieve limit {table.limit}",
            required_limit=threshold * 2,
        )
    return int(np.searchsorted(table.primes, threshold)) + 1
