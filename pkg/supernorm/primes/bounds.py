"""
Finite-range verification of explicit prime-number estimates.

Each verifier scans its range, tracks the smallest slack (margin) of the
inequality, and returns BoundReport records. A negative margin means the
inequality failed at `worst_at`.
"""
import math
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from supernorm.core.config import limits
from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.core.logging import get_logger, log_bound_event
from supernorm.core.numeric import CompensatedSum
from supernorm.primes.mertens import MathConstants, constants
from supernorm.primes.sieve import PrimeTable, nth_prime_upper_estimate, prime_count_upto

logger = get_logger(__name__)

IntRange = Tuple[int, int]

_CHUNK = 1 << 20


@dataclass(frozen=True)
class BoundReport:
    """Pass/fail record for one explicit inequality over an integer range."""

    bound_name: str
    range: IntRange
    all_hold: bool
    worst_margin: float
    worst_at: int
    checked: int = 0
    strict_at: Tuple[int, ...] = ()
    # margin at the first point scanned
    start_margin: float = math.nan
    start_at: int = 0

    @property
    def clears_budget(self) -> bool:
        """Margins must stay above the floating rounding budget, not just zero."""
        return self.worst_margin > limits.rounding_budget


class MarginTracker:
    """Running minimum of margins; ties resolve to the smallest argument."""

    def __init__(self, bound_name: str, n_range: IntRange):
        self.bound_name = bound_name
        self.range = n_range
        self.worst_margin = math.inf
        self.worst_at = n_range[0]
        self.start_margin = math.nan
        self.start_at = n_range[0]
        self.checked = 0

    def update(self, margin: float, at: int) -> None:
        if self.checked == 0:
            self.start_margin, self.start_at = margin, at
        self.checked += 1
        if margin < self.worst_margin or (margin == self.worst_margin and at < self.worst_at):
            self.worst_margin = margin
            self.worst_at = at

    def update_array(self, margins: np.ndarray, args: np.ndarray) -> None:
        if margins.size == 0:
            return
        if self.checked == 0:
            self.start_margin, self.start_at = float(margins[0]), int(args[0])
        i = int(np.argmin(margins))  # first minimum, i.e. smallest argument
        self.checked += int(margins.size) - 1
        self.update(float(margins[i]), int(args[i]))

    def report(self) -> BoundReport:
        report = BoundReport(
            bound_name=self.bound_name,
            range=self.range,
            all_hold=self.worst_margin >= 0,
            worst_margin=self.worst_margin,
            worst_at=self.worst_at,
            checked=self.checked,
            start_margin=self.start_margin,
            start_at=self.start_at,
        )
        log_bound_event(logger, report)
        return report


def _check_range(n_range: IntRange, minimum: int, maximum: int, what: str, why: str) -> None:
    lo, hi = n_range
    if lo > hi:
        raise InvalidArgumentError(f"empty {what} range [{lo}, {hi}]")
    if lo < minimum:
        raise InvalidArgumentError(f"{what} range starts at {lo}; the estimate needs {why}")
    if hi > maximum:
        raise OutOfRangeError(
            f"{what} range ends at {hi}, past the sieve ({maximum})",
            required_limit=nth_prime_upper_estimate(hi) if what == "n" else hi,
        )


def _scan_chunks(lo: int, hi: int, fn: Callable[[int, int], None]) -> None:
    start = lo
    while start <= hi:
        stop = min(start + _CHUNK - 1, hi)
        fn(start, stop)
        start = stop + 1


def verify_prime_bounds(table: PrimeTable, n_range: IntRange) -> List[BoundReport]:
    """Check the three n-th prime estimates for every n in range (valid for n >= 6)."""
    _check_range(n_range, limits.nth_prime_threshold, table.count, "n", "n >= 6")
    logger.info("Scanning n-th prime estimates", lo=n_range[0], hi=n_range[1])

    linear = MarginTracker("nth-prime-linear", n_range)
    logs = MarginTracker("nth-prime-log", n_range)
    loglogs = MarginTracker("nth-prime-loglog", n_range)

    def scan(a: int, b: int) -> None:
        n = np.arange(a, b + 1, dtype=np.int64)
        nf = n.astype(np.float64)
        p = table.primes[a - 1 : b].astype(np.float64)
        ln = np.log(nf)
        lln = np.log(ln)
        ratio = lln / ln

        # n log n <= p_n <= n (log n + log log n)
        linear.update_array(np.minimum(p - nf * ln, nf * (ln + lln) - p), n)

        # log n + log log n <= log p_n <= log n + log log n + log log n / log n
        lp = np.log(p)
        logs.update_array(np.minimum(lp - (ln + lln), (ln + lln + ratio) - lp), n)

        # |log log p_n - log log n - r| <= 2 r^2, r = log log n / log n
        deviation = np.abs(np.log(lp) - lln - ratio)
        loglogs.update_array(2.0 * ratio * ratio - deviation, n)

    _scan_chunks(n_range[0], n_range[1], scan)
    return [linear.report(), logs.report(), loglogs.report()]


def verify_mertens_bounds(
    table: PrimeTable,
    x_range: IntRange,
    consts: MathConstants = constants,
) -> List[BoundReport]:
    """Check the reciprocal-prime-sum and Mertens-product estimates for x >= 2,278,383.

    Sums and products only move at primes, so x runs over the range start and
    every prime in the range.
    """
    _check_range(
        x_range, limits.mertens_threshold, table.limit, "x", f"x >= {limits.mertens_threshold:,}"
    )
    lo, hi = x_range
    logger.info("Scanning Mertens estimates", lo=lo, hi=hi)

    prime_sum = MarginTracker("reciprocal-prime-sum", x_range)
    product = MarginTracker("mertens-product", x_range)
    reciprocal = MarginTracker("reciprocal-mertens-product", x_range)

    m_const = consts.mertens_M_f
    e_gamma = consts.e_gamma_f

    def evaluate(x: int, s: float, log_recip: float) -> None:
        lx = math.log(x)
        cube = lx**3
        prime_sum.update(1.0 / (5.0 * cube) - abs(s - math.log(lx) - m_const), x)
        # relative forms: P(x) e^gamma log x = 1 + O*(1/(5 log^3 x)), inverse with 1/4
        scaled = math.exp(log_recip) / (e_gamma * lx)
        product.update(1.0 / (5.0 * cube) - abs(1.0 / scaled - 1.0), x)
        reciprocal.update(1.0 / (4.0 * cube) - abs(scaled - 1.0), x)

    s = CompensatedSum()
    log_recip = CompensatedSum()
    upto = prime_count_upto(table, hi)
    start_done = False
    for p in table.primes[:upto].tolist():
        if p > lo and not start_done:
            evaluate(lo, s.value, log_recip.value)
            start_done = True
        s.add(1.0 / p)
        log_recip.add(-math.log1p(-1.0 / p))
        if p >= lo:
            if p == lo:
                start_done = True
            evaluate(p, s.value, log_recip.value)
    if not start_done:
        evaluate(lo, s.value, log_recip.value)

    return [prime_sum.report(), product.report(), reciprocal.report()]


def verify_log_prime_sum_bound(table: PrimeTable, n_range: IntRange) -> BoundReport:
    """Check sum_{j<=n} 1/log p_j <= 3n/log n, keeping the partial sum incrementally."""
    _check_range(
        n_range, limits.log_prime_sum_threshold, table.count, "n", "n >= 2"
    )
    lo, hi = n_range
    logger.info("Scanning reciprocal-log prime sum", lo=lo, hi=hi)

    tracker = MarginTracker("log-prime-sum", n_range)
    acc = CompensatedSum()
    for j, p in enumerate(table.primes[:hi].tolist(), start=1):
        acc.add(1.0 / math.log(p))
        if j >= lo:
            tracker.update(3.0 * j / math.log(j) - acc.value, j)
    return tracker.report()
