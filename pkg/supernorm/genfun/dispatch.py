"""
Build the series for any EnsembleSpec with the matching fast evaluator.
"""
from supernorm.genfun.dynamic import perimeter_series, size_series
from supernorm.genfun.max_part import max_part_series
from supernorm.genfun.series import Backend, CoeffSeries, cumulative
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode
from supernorm.primes.sieve import PrimeTable


def series_for(
    table: PrimeTable | None,
    spec: EnsembleSpec,
    nmax: int,
    backend: Backend = Backend.EXACT,
    allow_large: bool = False,
) -> CoeffSeries:
    if spec.ensemble is Ensemble.MAX_PART:
        return max_part_series(
            table, spec.weight, spec.restriction, spec.beta, nmax, backend, spec.mode
        )
    build = size_series if spec.ensemble is Ensemble.SIZE else perimeter_series
    series = build(
        table, spec.weight, spec.restriction, spec.beta, nmax, backend, allow_large=allow_large
    )
    return cumulative(series) if spec.mode is Mode.CUMULATIVE else series
