"""
`primes`: p_n with running Mertens sums, optionally storing the sieve cache.
"""
import math
from typing import Iterator, List

from supernorm.cli.output import open_output, write_csv
from supernorm.core.errors import InvalidArgumentError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import CompensatedSum, format_float
from supernorm.primes.sieve import PrimeTable, cache_path_for, nth_prime, save_prime_table

logger = get_logger(__name__)

HEADER = ["n", "prime", "reciprocal_prime_sum", "reciprocal_mertens_product"]


def prime_rows(table: PrimeTable, nmax: int) -> Iterator[List[str]]:
    nth_prime(table, nmax)  # fail before any row is written
    prime_sum = CompensatedSum()
    log_product = CompensatedSum()
    for n, p in enumerate(table.primes[:nmax].tolist(), start=1):
        prime_sum.add(1.0 / p)
        log_product.add(-math.log1p(-1.0 / p))
        yield [str(n), str(p), format_float(prime_sum.value), format_float(math.exp(log_product.value))]


def write_cache(table: PrimeTable) -> None:
    path = cache_path_for(table.limit)
    if path is None:
        raise InvalidArgumentError("--write-cache needs SIEVE_CACHE_DIR to be set")
    save_prime_table(table, path)


def run_primes(table: PrimeTable, nmax: int, out=None, store: bool = False) -> int:
    rows = list(prime_rows(table, nmax))
    if store:
        write_cache(table)
    with open_output(out) as stream:
        write_csv(stream, HEADER, rows)
    return 0
