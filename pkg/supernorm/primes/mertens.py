"""
Euler's constant, Mertens' constant, and Mertens sums and products over the sieve.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union, overload

import mpmath
import numpy as np

from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import BigRational, CompensatedSum
from supernorm.primes.sieve import PrimeTable, prime_count_upto

logger = get_logger(__name__)

# Literature values, 40 significant digits.
EULER_GAMMA_DIGITS = "0.5772156649015328606065120900824024310422"
MERTENS_M_DIGITS = "0.2614972128476427837554268386086958590516"

CONSTANTS_DPS = 40

# Below this many primes the products are formed factor by factor.
_DIRECT_PRODUCT_MAX = 64


@dataclass(frozen=True)
class MathConstants:
    """High-precision constants; float views feed the predictors."""

    gamma: mpmath.mpf
    mertens_M: mpmath.mpf
    e_gamma: mpmath.mpf
    e_neg_gamma: mpmath.mpf

    @property
    def gamma_f(self) -> float:
        return float(self.gamma)

    @property
    def mertens_M_f(self) -> float:
        return float(self.mertens_M)

    @property
    def e_gamma_f(self) -> float:
        return float(self.e_gamma)

    @property
    def e_neg_gamma_f(self) -> float:
        return float(self.e_neg_gamma)


def mertens_constants() -> MathConstants:
    """Build the constants at CONSTANTS_DPS digits."""
    with mpmath.workdps(CONSTANTS_DPS):
        gamma = mpmath.mpf(EULER_GAMMA_DIGITS)
        return MathConstants(
            gamma=gamma,
            mertens_M=mpmath.mpf(MERTENS_M_DIGITS),
            e_gamma=mpmath.exp(gamma),
            e_neg_gamma=mpmath.exp(-gamma),
        )


# Global constants instance
constants = mertens_constants()


def _prime_slice(table: PrimeTable, x: Union[int, float]) -> np.ndarray:
    if x < 2:
        raise InvalidArgumentError(f"x must be >= 2, got {x}")
    if x > table.limit:
        raise OutOfRangeError(
            f"x={x} exceeds the sieve limit {table.limit}", required_limit=int(math.ceil(x))
        )
    return table.primes[: prime_count_upto(table, x)]


def reciprocal_prime_sum(table: PrimeTable, x: Union[int, float]) -> float:
    """Sum of 1/p over primes p <= x, compensated."""
    acc = CompensatedSum()
    for p in _prime_slice(table, x).tolist():
        acc.add(1.0 / p)
    return acc.value


def _log_reciprocal_product(primes: np.ndarray) -> float:
    """Compensated sum of log(p/(p-1)) = -log1p(-1/p)."""
    acc = CompensatedSum()
    for p in primes.tolist():
        acc.add(-math.log1p(-1.0 / p))
    return acc.value


@overload
def mertens_product(
    table: PrimeTable, x: Union[int, float], exact: Literal[True]
) -> BigRational:
    ...


@overload
def mertens_product(
    table: PrimeTable, x: Union[int, float], exact: Literal[False] = ...
) -> float:
    ...


def mertens_product(
    table: PrimeTable, x: Union[int, float], exact: bool = False
) -> Union[float, BigRational]:
    """P(x) = prod_{p <= x} (1 - 1/p)."""
    primes = _prime_slice(table, x)
    if exact:
        ps = primes.tolist()
        return Fraction(math.prod(p - 1 for p in ps), math.prod(ps))
    if primes.size <= _DIRECT_PRODUCT_MAX:
        result = 1.0
        for p in primes.tolist():
            result *= (p - 1) / p
        return result
    return math.exp(-_log_reciprocal_product(primes))


def reciprocal_mertens_product(table: PrimeTable, x: Union[int, float]) -> float:
    """1/P(x) = prod_{p <= x} p/(p - 1); log-space accumulation for long products."""
    primes = _prime_slice(table, x)
    if primes.size <= _DIRECT_PRODUCT_MAX:
        result = 1.0
        for p in primes.tolist():
            result *= p / (p - 1)
        return result
    return math.exp(_log_reciprocal_product(primes))


def reciprocal_mertens_product_exact(table: PrimeTable, x: Union[int, float]) -> BigRational:
    """Exact 1/P(x)."""
    ps = _prime_slice(table, x).tolist()
    return Fraction(math.prod(ps), math.prod(p - 1 for p in ps))


@dataclass(frozen=True)
class ConstantsCheck:
    """Outcome of recomputing the literature constants."""

    gamma_error: float
    mertens_estimate: float
    mertens_error: float
    tail_estimate: float
    sieve_limit: int

    @property
    def gamma_ok(self) -> bool:
        return self.gamma_error < 1e-30

    @property
    def mertens_ok(self) -> bool:
        # six significant digits of M ~ 0.26149...
        return self.mertens_error < 5e-7


def cross_check_constants(table: PrimeTable, consts: MathConstants = constants) -> ConstantsCheck:
    """Compare gamma with mpmath and recompute M = gamma + sum_p (log(1 - 1/p) + 1/p)."""
    with mpmath.workdps(CONSTANTS_DPS):
        gamma_error = float(abs(consts.gamma - +mpmath.euler))

    acc = CompensatedSum(consts.gamma_f)
    for p in table.primes.tolist():
        acc.add(math.log1p(-1.0 / p) + 1.0 / p)
    estimate = acc.value

    # The omitted tail is about -sum_{p > x} 1/(2p^2) ~ -1/(2 x log x).
    x = table.limit
    tail = 1.0 / (2.0 * x * math.log(x))
    check = ConstantsCheck(
        gamma_error=gamma_error,
        mertens_estimate=estimate,
        mertens_error=abs(estimate - consts.mertens_M_f),
        tail_estimate=tail,
        sieve_limit=x,
    )
    logger.info(
        "Constants cross-checked",
        gamma_error=gamma_error,
        mertens_estimate=estimate,
        mertens_error=check.mertens_error,
        sieve_limit=x,
    )
    return check
