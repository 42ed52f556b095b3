"""
`bounds`: explicit prime-estimate scans plus the C^_max window.

Each bound gets a row at the start of its range and a row at its worst
margin; the two collapse into one when they coincide.
"""
from typing import Iterator, List

from supernorm.asymptotics.window import first_index_above, mertens_window_check
from supernorm.cli.output import open_output, write_csv
from supernorm.core.config import limits
from supernorm.core.errors import InvalidArgumentError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import format_float
from supernorm.primes.bounds import (
    BoundReport,
    verify_log_prime_sum_bound,
    verify_mertens_bounds,
    verify_prime_bounds,
)
from supernorm.primes.sieve import PrimeTable

logger = get_logger(__name__)

HEADER = ["bound", "n_or_x", "margin", "holds"]


def check_bounds_limit(limit: int) -> None:
    if limit < limits.mertens_threshold:
        raise InvalidArgumentError(
            f"sieve limit {limit} is below the Mertens threshold "
            f"{limits.mertens_threshold:,}; pass --sieve-limit >= {limits.mertens_threshold}"
        )


def bound_reports(table: PrimeTable) -> List[BoundReport]:
    check_bounds_limit(table.limit)
    reports: List[BoundReport] = []
    n_hi = min(limits.nth_prime_scan_max, table.count)
    reports += verify_prime_bounds(table, (limits.nth_prime_threshold, n_hi))
    reports.append(
        verify_log_prime_sum_bound(
            table, (limits.log_prime_sum_threshold, min(limits.log_prime_sum_scan_max, table.count))
        )
    )
    reports += verify_mertens_bounds(
        table, (limits.mertens_threshold, min(limits.mertens_scan_max, table.limit))
    )
    reports.append(
        mertens_window_check(table, (first_index_above(table, limits.mertens_threshold), table.count))
    )
    return reports


def holds(report: BoundReport) -> bool:
    return report.all_hold and report.clears_budget


def _row(name: str, at: int, margin: float) -> List[str]:
    ok = margin > limits.rounding_budget
    return [name, str(at), format_float(margin), "true" if ok else "false"]


def bound_rows(report: BoundReport) -> Iterator[List[str]]:
    """Start-of-range row, then the worst row when it sits elsewhere."""
    if report.start_at != report.worst_at:
        yield _row(report.bound_name, report.start_at, report.start_margin)
    yield _row(report.bound_name, report.worst_at, report.worst_margin)


def run_bounds(table: PrimeTable, out=None) -> int:
    reports = bound_reports(table)
    rows = (row for r in reports for row in bound_rows(r))
    with open_output(out) as stream:
        write_csv(stream, HEADER, rows)
    return 0 if all(holds(r) for r in reports) else 1
