"""
`stat`: one statistic as an `n,value` CSV.
"""
from typing import Callable, List, Optional

from supernorm.cli.output import open_output, write_csv
from supernorm.core.logging import get_logger
from supernorm.core.numeric import format_value
from supernorm.genfun import Backend, series_for
from supernorm.genfun.series import Value
from supernorm.oracle import oracle_series
from supernorm.partitions.model import Ensemble, Weight
from supernorm.primes.sieve import PrimeTable
from supernorm.schemas import RunBackend, RunConfig

logger = get_logger(__name__)

TableLoader = Callable[[int], PrimeTable]


def stat_values(config: RunConfig, load_table: TableLoader) -> List[Value]:
    spec = config.spec
    nmax = config.resolved_nmax
    table: Optional[PrimeTable] = None
    if spec.weight is Weight.SUPERNORM:
        table = load_table(config.resolved_sieve_limit)

    if config.backend is RunBackend.EXACT_ORACLE:
        return oracle_series(table, [spec], nmax, allow_large=config.allow_large)[spec]
    series = series_for(
        table, spec, nmax, Backend(config.backend.value), allow_large=config.allow_large
    )
    return list(series.values)


def run_stat(config: RunConfig, load_table: TableLoader) -> int:
    values = stat_values(config, load_table)
    first = 0 if config.ensemble is Ensemble.SIZE else 1
    rows = ((str(n), format_value(values[n])) for n in range(first, len(values)))
    with open_output(config.out) as stream:
        count = write_csv(stream, ["n", "value"], rows)
    logger.info("Statistic written", spec=config.spec.label, rows=count)
    return 0
