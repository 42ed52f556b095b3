"""
Closed forms for the max-part ensemble.

Summing over every partition with largest part <= n factorises:
    C(n) = prod_{j <= n admissible} f(t_j),  f(t) = 1/(1 - t) or 1 + t (distinct),
and the individual statistic is W(n) = C(n - 1) (f(t_n) - 1).
"""
import math
from fractions import Fraction
from typing import List, Union

from supernorm.core.errors import InvalidArgumentError, UnsupportedError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import BigRational, CompensatedSum
from supernorm.genfun.dynamic import weight_factors
from supernorm.genfun.series import Backend, CoeffSeries, Value
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Restriction, Weight
from supernorm.primes.mertens import reciprocal_mertens_product, reciprocal_mertens_product_exact
from supernorm.primes.sieve import PrimeTable, nth_prime

logger = get_logger(__name__)


def max_supernorm_cumulative(
    table: PrimeTable, n: int, backend: Backend = Backend.EXACT
) -> Union[Fraction, float]:
    """C^_max(n) = prod_{j <= n} p_j/(p_j - 1)."""
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    if n == 0:
        return Fraction(1) if Backend(backend) is Backend.EXACT else 1.0
    p_n = nth_prime(table, n)
    if Backend(backend) is Backend.EXACT:
        return reciprocal_mertens_product_exact(table, p_n)
    return reciprocal_mertens_product(table, p_n)


def max_supernorm_individual(
    table: PrimeTable, n: int, backend: Backend = Backend.EXACT
) -> Union[Fraction, float]:
    """W^_max(n) = C^_max(n - 1)/(p_n - 1)."""
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    p_n = nth_prime(table, n)
    previous = max_supernorm_cumulative(table, n - 1, backend)
    if isinstance(previous, Fraction):
        return previous / (p_n - 1)
    return previous / (p_n - 1.0)


def max_norm_star(n: int, mode: Mode = Mode.INDIVIDUAL) -> BigRational:
    """W*_max(n) = 1 except W*_max(1) = 0; C*_max(n) = n for n >= 1.

    prod_{j=2}^{n} j/(j - 1) telescopes to n.
    """
    if n < 0:
        raise InvalidArgumentError(f"n must be >= 0, got {n}")
    if Mode(mode) is Mode.INDIVIDUAL:
        return Fraction(0 if n == 1 else 1)
    return Fraction(max(n, 1))


def max_part_series(
    table: PrimeTable | None,
    weight: Weight,
    restriction: Restriction,
    beta: float,
    nmax: int,
    backend: Backend = Backend.EXACT,
    mode: Mode = Mode.INDIVIDUAL,
) -> CoeffSeries:
    """Max-part series from the product formula; values[0] = 1 in both modes."""
    restriction = Restriction(restriction)
    backend = Backend(backend)
    spec = EnsembleSpec(
        ensemble=Ensemble.MAX_PART,
        weight=weight,
        mode=mode,
        restriction=restriction,
        beta=beta,
    )
    if spec.is_divergent:
        raise UnsupportedError(
            f"{spec.label} diverges: infinitely many partitions with bounded weight"
        )
    t = weight_factors(table, weight, beta, nmax, backend)
    distinct = restriction is Restriction.DISTINCT
    logger.info("Building max-part series", spec=spec.label, nmax=nmax, backend=backend.value)

    individual: List[Value]
    totals: List[Value]
    if backend is Backend.EXACT:
        total = Fraction(1)
        individual, totals = [Fraction(1)], [total]
        for j in range(1, nmax + 1):
            if j < restriction.min_part:
                individual.append(Fraction(0))
            else:
                tj = t[j]
                gain = tj if distinct else tj / (1 - tj)
                individual.append(total * gain)
                total *= 1 + gain
            totals.append(total)
    else:
        log_total = CompensatedSum()
        individual, totals = [1.0], [1.0]
        for j in range(1, nmax + 1):
            if j < restriction.min_part:
                individual.append(0.0)
            else:
                tj = float(t[j])
                gain = tj if distinct else tj / (1.0 - tj)
                individual.append(math.exp(log_total.value) * gain)
                log_total.add(math.log1p(tj) if distinct else -math.log1p(-tj))
            totals.append(math.exp(log_total.value))

    return CoeffSeries(
        spec=spec,
        nmax=nmax,
        values=tuple(individual if spec.mode is Mode.INDIVIDUAL else totals),
        backend=backend,
    )
