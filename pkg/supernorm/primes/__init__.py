# Primes module
from supernorm.primes.bounds import (
    BoundReport,
    verify_log_prime_sum_bound,
    verify_mertens_bounds,
    verify_prime_bounds,
)
from supernorm.primes.mertens import (
    MathConstants,
    constants,
    cross_check_constants,
    mertens_constants,
    mertens_product,
    reciprocal_mertens_product,
    reciprocal_mertens_product_exact,
    reciprocal_prime_sum,
)
from supernorm.primes.sieve import (
    PrimeTable,
    build_prime_table,
    cached_prime_table,
    is_prime,
    load_prime_table,
    nth_prime,
    prime_index,
    save_prime_table,
)

__all__ = [
    "BoundReport",
    "MathConstants",
    "PrimeTable",
    "build_prime_table",
    "cached_prime_table",
    "constants",
    "cross_check_constants",
    "is_prime",
    "load_prime_table",
    "mertens_constants",
    "mertens_product",
    "nth_prime",
    "prime_index",
    "reciprocal_mertens_product",
    "reciprocal_mertens_product_exact",
    "reciprocal_prime_sum",
    "save_prime_table",
    "verify_log_prime_sum_bound",
    "verify_mertens_bounds",
    "verify_prime_bounds",
]
