"""
Brute-force evaluation of partition statistics by direct enumeration.

Every admitted partition is visited and its weight ** (-beta) added exactly.
Terms are accumulated as integers over a common denominator fixed in advance
(every weight divides prod_j w_j ** e_j, where e_j bounds the multiplicity of
part j), bucketed by ensemble index, and reduced to lowest terms once per bucket.
"""
import math
from collections import defaultdict
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from supernorm.core.config import limits
from supernorm.core.errors import ResourceLimitError, UnsupportedError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import BigRational
from supernorm.partitions.enumerate import (
    enumerate_by_largest_part,
    enumerate_by_perimeter,
    enumerate_by_size,
)
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Partition, Restriction, Weight
from supernorm.partitions.statistics import weight_value
from supernorm.primes.sieve import PrimeTable, nth_prime

logger = get_logger(__name__)

Indexed = Tuple[int, Partition]


def _check_scope(spec: EnsembleSpec, n: int, allow_large: bool) -> None:
    if spec.ensemble is Ensemble.MAX_PART:
        raise UnsupportedError(
            "max-part ensembles are infinite; use oracle_max_truncated or the closed forms"
        )
    if allow_large:
        return
    cap = (
        limits.oracle_size_nmax
        if spec.ensemble is Ensemble.SIZE
        else limits.oracle_perimeter_nmax
    )
    if n > cap:
        raise ResourceLimitError(
            f"exact oracle for the {spec.ensemble.value} ensemble is capped at n <= {cap}; "
            "pass allow_large to override"
        )


def _check_exact_beta(spec: EnsembleSpec) -> int:
    if not spec.beta_is_integer:
        raise UnsupportedError(
            f"beta={spec.beta} is not an integer; the exact oracle cannot represent it, "
            "use oracle_stat_float"
        )
    return int(spec.beta)


def _indexed_stream(
    ensemble: Ensemble, restriction: Restriction, indices: Iterable[int]
) -> Iterator[Indexed]:
    """(k, partition) for every partition of ensemble(k), k in indices."""
    for k in indices:
        if ensemble is Ensemble.SIZE:
            for lam in enumerate_by_size(k, restriction):
                yield k, lam
        elif k >= 1:
            for lam in enumerate_by_perimeter(k, restriction):
                yield k, lam


def _weight_base(table: PrimeTable | None, weight: Weight, j: int) -> int:
    return j if weight is Weight.NORM else nth_prime(table, j)  # type: ignore[arg-type]


def _common_denominator(
    table: PrimeTable | None, weight: Weight, exponents: Dict[int, int]
) -> int:
    return math.prod(_weight_base(table, weight, j) ** e for j, e in exponents.items() if e > 0)


def _multiplicity_bounds(ensemble: Ensemble, nmax: int) -> Dict[int, int]:
    """Upper bounds on the multiplicity of part j over ensemble(k <= nmax)."""
    if ensemble is Ensemble.SIZE:
        return {j: nmax // j for j in range(1, nmax + 1)}
    return {j: nmax - j + 1 for j in range(1, nmax + 1)}


class _Buckets:
    """Per-index integer numerators over one common denominator per beta."""

    def __init__(
        self,
        table: PrimeTable | None,
        weight: Weight,
        betas: Sequence[int],
        exponents: Dict[int, int],
    ):
        self.table = table
        self.weight = weight
        self.betas = list(betas)
        self.base = _common_denominator(table, weight, exponents)
        self.numerators: Dict[int, Dict[int, int]] = {b: defaultdict(int) for b in self.betas}

    def add(self, k: int, lam: Partition) -> None:
        w = weight_value(self.table, lam, self.weight)
        quotient = self.base // w
        for b in self.betas:
            if b >= 0:
                self.numerators[b][k] += quotient**b
            else:
                self.numerators[b][k] += w ** (-b)

    def value(self, beta: int, k: int) -> Fraction:
        num = self.numerators[beta].get(k, 0)
        if beta >= 0:
            return Fraction(num, self.base**beta)
        return Fraction(num)


def oracle_series(
    table: PrimeTable | None,
    specs: Sequence[EnsembleSpec],
    nmax: int,
    allow_large: bool = False,
) -> Dict[EnsembleSpec, List[Fraction]]:
    """Values at n = 0..nmax for several specs from one enumeration per (ensemble, restriction)."""
    results: Dict[EnsembleSpec, List[Fraction]] = {}
    groups: Dict[Tuple[Ensemble, Restriction], List[EnsembleSpec]] = defaultdict(list)
    for spec in specs:
        _check_scope(spec, nmax, allow_large)
        _check_exact_beta(spec)
        groups[(spec.ensemble, spec.restriction)].append(spec)

    for (ensemble, restriction), group in groups.items():
        logger.info(
            "Enumerating oracle ensemble",
            ensemble=ensemble.value,
            restriction=restriction.value,
            nmax=nmax,
            specs=len(group),
        )
        exponents = _multiplicity_bounds(ensemble, nmax)
        weights = sorted({s.weight for s in group}, key=lambda w: w.value)
        buckets = {
            w: _Buckets(
                table,
                w,
                sorted({int(s.beta) for s in group if s.weight is w}),
                exponents,
            )
            for w in weights
        }
        for k, lam in _indexed_stream(ensemble, restriction, range(nmax + 1)):
            for b in buckets.values():
                b.add(k, lam)

        for spec in group:
            b = buckets[spec.weight]
            beta = int(spec.beta)
            individual = [b.value(beta, k) for k in range(nmax + 1)]
            if spec.mode is Mode.INDIVIDUAL:
                results[spec] = individual
            else:
                # the empty partition once, then every nonempty index
                running = Fraction(1)
                cumulative = [running]
                for k in range(1, nmax + 1):
                    running += individual[k]
                    cumulative.append(running)
                results[spec] = cumulative
    return results


def oracle_stat(
    table: PrimeTable | None,
    spec: EnsembleSpec,
    n: int,
    allow_large: bool = False,
) -> BigRational:
    """Exact sum of weight(lambda) ** (-beta) over the ensemble at n."""
    _check_scope(spec, n, allow_large)
    beta = _check_exact_beta(spec)
    exponents = _multiplicity_bounds(spec.ensemble, max(n, 1))
    buckets = _Buckets(table, spec.weight, [beta], exponents)

    if spec.mode is Mode.INDIVIDUAL:
        for k, lam in _indexed_stream(spec.ensemble, spec.restriction, [n]):
            buckets.add(k, lam)
        return buckets.value(beta, n)

    buckets.add(0, Partition.empty())
    for k, lam in _indexed_stream(spec.ensemble, spec.restriction, range(1, n + 1)):
        buckets.add(k, lam)
    return sum((buckets.value(beta, k) for k in range(n + 1)), Fraction(0))


def oracle_stat_float(table: PrimeTable | None, spec: EnsembleSpec, n: int) -> float:
    """Float twin of oracle_stat for any real beta; not exact."""
    _check_scope(spec, n, allow_large=True)
    if spec.mode is Mode.INDIVIDUAL:
        stream: Iterable[Indexed] = _indexed_stream(spec.ensemble, spec.restriction, [n])
    else:
        stream = _indexed_stream(spec.ensemble, spec.restriction, range(1, n + 1))
    terms = [1.0] if spec.mode is Mode.CUMULATIVE else []
    for _, lam in stream:
        w = weight_value(table, lam, spec.weight)
        terms.append(math.exp(-spec.beta * math.log(w)))
    return math.fsum(terms)


def oracle_max_truncated(
    table: PrimeTable | None,
    weight: Weight,
    restriction: Restriction,
    n: int,
    size_cutoff: int,
    mode: Mode = Mode.INDIVIDUAL,
    beta: int = 1,
) -> BigRational:
    """Exact partial sum over the max-part ensemble restricted to size <= size_cutoff.

    A certified lower bound for the full (infinite) statistic, nondecreasing in
    size_cutoff.
    """
    if weight is Weight.NORM and restriction is Restriction.ALL:
        raise UnsupportedError(
            "reciprocal norms over the max-part ensemble diverge: every 1^k has norm 1"
        )
    if beta < 0 or int(beta) != beta:
        raise UnsupportedError(f"truncated max-part oracle needs an integer beta >= 0, got {beta}")
    exponents = {j: size_cutoff // j for j in range(1, n + 1)}
    buckets = _Buckets(table, weight, [int(beta)], exponents)
    for lam in enumerate_by_largest_part(n, size_cutoff, restriction, mode):
        buckets.add(0, lam)
    return buckets.value(int(beta), 0)
