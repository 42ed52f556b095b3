"""
Dynamic programs for the size and perimeter series.

Weights enter only as t_k = w(k) ** beta with w(k) = 1/k (norm) or 1/p_k
(supernorm), so every beta shares one code path.

Size: coefficients of prod_k (1 - t_k x^k)^(-1), or prod_k (1 + t_k x^k) for
distinct parts.

Perimeter: W(n) = sum_m t_m T_m(n - m), where T_m(r) is the weight of all
r-element multisets of parts <= m:
    T_m(r) = T_{m-1}(r) + t_m T_m(r - 1),  T_0 = [1, 0, 0, ...].
Distinct parts use subsets of parts < m instead:
    D_m(r) = D_{m-1}(r) + t_m D_{m-1}(r - 1).
"""
from fractions import Fraction
from typing import List

import numpy as np

from supernorm.core.config import limits
from supernorm.core.errors import ResourceLimitError, UnsupportedError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import PairwiseVectorSum
from supernorm.genfun.series import Backend, CoeffSeries, Value
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Restriction, Weight
from supernorm.primes.sieve import PrimeTable, nth_prime

logger = get_logger(__name__)


def _check_cap(ensemble: Ensemble, nmax: int, backend: Backend, allow_large: bool) -> None:
    if allow_large:
        return
    caps = {
        (Ensemble.SIZE, Backend.EXACT): limits.exact_size_nmax,
        (Ensemble.SIZE, Backend.FLOAT): limits.float_size_nmax,
        (Ensemble.PERIMETER, Backend.EXACT): limits.exact_perimeter_nmax,
        (Ensemble.PERIMETER, Backend.FLOAT): limits.float_perimeter_nmax,
    }
    cap = caps[(ensemble, backend)]
    if nmax > cap:
        raise ResourceLimitError(
            f"{backend.value} {ensemble.value} series is capped at nmax <= {cap}, got {nmax}"
        )


def weight_factors(
    table: PrimeTable | None,
    weight: Weight,
    beta: float,
    nmax: int,
    backend: Backend,
) -> List[Value]:
    """[0, t_1, ..., t_nmax] with t_k = w(k) ** beta."""
    if nmax < 1:
        return [Fraction(0) if backend is Backend.EXACT else 0.0]

    if weight is Weight.SUPERNORM:
        if table is None:
            raise UnsupportedError("supernorm series need a prime table")
        nth_prime(table, nmax)  # raises OutOfRangeError naming the required limit
        bases = [int(p) for p in table.primes[:nmax].tolist()]
    else:
        bases = list(range(1, nmax + 1))

    if backend is Backend.EXACT:
        if not float(beta).is_integer():
            raise UnsupportedError(
                f"beta={beta} is not an integer; use the float backend"
            )
        b = int(beta)
        if b >= 0:
            return [Fraction(0)] + [Fraction(1, k**b) for k in bases]
        return [Fraction(0)] + [Fraction(k ** (-b)) for k in bases]

    arr = np.power(np.asarray(bases, dtype=np.float64), -float(beta))
    return [0.0] + arr.tolist()


def _spec(ensemble: Ensemble, weight: Weight, restriction: Restriction, beta: float) -> EnsembleSpec:
    return EnsembleSpec(
        ensemble=ensemble,
        weight=weight,
        mode=Mode.INDIVIDUAL,
        restriction=restriction,
        beta=beta,
    )


def _size_exact(t: List[Value], nmax: int, restriction: Restriction) -> List[Value]:
    a: List[Value] = [Fraction(1)] + [Fraction(0)] * nmax
    for k in range(restriction.min_part, nmax + 1):
        tk = t[k]
        if restriction is Restriction.DISTINCT:
            for m in range(nmax, k - 1, -1):
                a[m] += tk * a[m - k]
        else:
            for m in range(k, nmax + 1):
                a[m] += tk * a[m - k]
    return a


def _size_float(t: List[Value], nmax: int, restriction: Restriction) -> List[Value]:
    a = np.zeros(nmax + 1)
    a[0] = 1.0
    for k in range(restriction.min_part, nmax + 1):
        tk = float(t[k])
        if restriction is Restriction.DISTINCT:
            a[k:] = a[k:] + tk * a[:-k]
        else:
            # each block of k coefficients depends only on the block before it
            for start in range(k, nmax + 1, k):
                stop = min(start + k, nmax + 1)
                a[start:stop] += tk * a[start - k : stop - k]
    return a.tolist()


def size_series(
    table: PrimeTable | None,
    weight: Weight,
    restriction: Restriction,
    beta: float,
    nmax: int,
    backend: Backend = Backend.EXACT,
    allow_large: bool = False,
) -> CoeffSeries:
    """Individual size-ensemble series; values[0] = 1 is the empty partition."""
    restriction = Restriction(restriction)
    backend = Backend(backend)
    _check_cap(Ensemble.SIZE, nmax, backend, allow_large)
    t = weight_factors(table, weight, beta, nmax, backend)

    logger.info(
        "Building size series",
        weight=weight.value,
        restriction=restriction.value,
        beta=beta,
        nmax=nmax,
        backend=backend.value,
    )
    if backend is Backend.EXACT:
        values = _size_exact(t, nmax, restriction)
    else:
        values = _size_float(t, nmax, restriction)

    return CoeffSeries(
        spec=_spec(Ensemble.SIZE, weight, restriction, beta),
        nmax=nmax,
        values=tuple(values),
        backend=backend,
    )


def _perimeter_exact(t: List[Value], nmax: int, restriction: Restriction) -> List[Value]:
    values: List[Value] = [Fraction(0)] * (nmax + 1)
    state: List[Value] = [Fraction(1)] + [Fraction(0)] * nmax
    distinct = restriction is Restriction.DISTINCT

    for m in range(restriction.min_part, nmax + 1):
        tm = t[m]
        if distinct:
            for n in range(m, nmax + 1):
                values[n] += tm * state[n - m]
            for r in range(nmax - m, 0, -1):
                state[r] += tm * state[r - 1]
        else:
            for r in range(1, nmax - m + 1):
                state[r] += tm * state[r - 1]
            for n in range(m, nmax + 1):
                values[n] += tm * state[n - m]
    return values


def _perimeter_float(t: List[Value], nmax: int, restriction: Restriction) -> List[Value]:
    # contributions over m are summed pairwise per coefficient
    acc = PairwiseVectorSum(nmax + 1)
    state = [1.0] + [0.0] * nmax
    distinct = restriction is Restriction.DISTINCT

    for m in range(restriction.min_part, nmax + 1):
        tm = float(t[m])
        width = nmax - m + 1
        if distinct:
            acc.add(m, tm * np.asarray(state[:width]))
            for r in range(nmax - m, 0, -1):
                state[r] += tm * state[r - 1]
        else:
            for r in range(1, width):
                state[r] += tm * state[r - 1]
            acc.add(m, tm * np.asarray(state[:width]))
    return acc.value.tolist()


def perimeter_series(
    table: PrimeTable | None,
    weight: Weight,
    restriction: Restriction,
    beta: float,
    nmax: int,
    backend: Backend = Backend.EXACT,
    allow_large: bool = False,
) -> CoeffSeries:
    """Individual perimeter-ensemble series; values[0] = 0 (no partition has perimeter 0)."""
    restriction = Restriction(restriction)
    backend = Backend(backend)
    _check_cap(Ensemble.PERIMETER, nmax, backend, allow_large)
    t = weight_factors(table, weight, beta, nmax, backend)

    logger.info(
        "Building perimeter series",
        weight=weight.value,
        restriction=restriction.value,
        beta=beta,
        nmax=nmax,
        backend=backend.value,
    )
    if backend is Backend.EXACT:
        values = _perimeter_exact(t, nmax, restriction)
    else:
        values = _perimeter_float(t, nmax, restriction)

    return CoeffSeries(
        spec=_spec(Ensemble.PERIMETER, weight, restriction, beta),
        nmax=nmax,
        values=tuple(values),
        backend=backend,
    )
