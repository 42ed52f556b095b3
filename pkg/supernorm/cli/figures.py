"""
`figure`: CSV data behind each plot, the statistic against its caption curves.

Values come from the exact backend and are written as floats.
"""
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from supernorm.asymptotics.models import AsymptoticModel, predictor
from supernorm.cli.output import open_output, write_csv
from supernorm.core.errors import InvalidArgumentError
from supernorm.core.logging import get_logger
from supernorm.core.numeric import format_float
from supernorm.genfun import Backend, CoeffSeries, cumulative, max_part_series, series_product
from supernorm.genfun.dynamic import perimeter_series, size_series
from supernorm.partitions.model import Mode, Restriction, Weight
from supernorm.primes.mertens import MathConstants, constants
from supernorm.primes.sieve import PrimeTable

logger = get_logger(__name__)

SeriesBuilder = Callable[[PrimeTable, int], CoeffSeries]

_SN, _NM, _ALL = Weight.SUPERNORM, Weight.NORM, Restriction.ALL
_EXACT = Backend.EXACT


def _w_size(table: PrimeTable, nmax: int) -> CoeffSeries:
    return size_series(None, _NM, _ALL, 1, nmax, _EXACT)


def _w_star_size(table: PrimeTable, nmax: int) -> CoeffSeries:
    return size_series(None, _NM, Restriction.NO_ONES, 1, nmax, _EXACT)


def _w_per(table: PrimeTable, nmax: int) -> CoeffSeries:
    return perimeter_series(None, _NM, _ALL, 1, nmax, _EXACT)


def _w_hat_size(table: PrimeTable, nmax: int) -> CoeffSeries:
    return size_series(table, _SN, _ALL, 1, nmax, _EXACT)


def _w_hat_per(table: PrimeTable, nmax: int) -> CoeffSeries:
    return perimeter_series(table, _SN, _ALL, 1, nmax, _EXACT)


def _c_hat_size(table: PrimeTable, nmax: int) -> CoeffSeries:
    return cumulative(_w_hat_size(table, nmax))


def _c_hat_per(table: PrimeTable, nmax: int) -> CoeffSeries:
    return cumulative(_w_hat_per(table, nmax))


def _c_hat_max(table: PrimeTable, nmax: int) -> CoeffSeries:
    return max_part_series(table, _SN, _ALL, 1, nmax, _EXACT, Mode.CUMULATIVE)


def _ww_product(table: PrimeTable, nmax: int) -> CoeffSeries:
    return series_product(_w_size(table, nmax), _w_hat_size(table, nmax), name="w-size*w-hat-size")


@dataclass(frozen=True)
class FigureDef:
    figure_id: str
    nmax: int
    build: SeriesBuilder
    curves: Tuple[AsymptoticModel, ...]


_M = AsymptoticModel

FIGURES: Dict[str, FigureDef] = {
    f.figure_id: f
    for f in (
        FigureDef("w-size", 70, _w_size, (_M.LEHMER_LINEAR,)),
        FigureDef("w-size-1", 40, _w_star_size, (_M.LEHMER_CONST,)),
        FigureDef("c-hat-max", 20, _c_hat_max, (_M.LOG_LOGLOG,)),
        FigureDef("c-hat-per", 20, _c_hat_per, (_M.LOG_LOGLOG, _M.LOG)),
        FigureDef("c-hat-size", 70, _c_hat_size, (_M.LOG, _M.LOG_LOGLOG)),
        FigureDef("c-hat-size-loglog", 70, _c_hat_size, (_M.LOG_LOGLOG,)),
        FigureDef("w-hat-size", 70, _w_hat_size, (_M.INV,)),
        FigureDef("w-hat-per", 20, _w_hat_per, (_M.INV,)),
        FigureDef("ww-product", 70, _ww_product, (_M.UNIT,)),
        FigureDef("w-per", 20, _w_per, (_M.IDENT, _M.LEHMER_LINEAR)),
    )
}


def figure_header(figure: FigureDef) -> List[str]:
    header = ["n", "stat", "asymptotic", "residual"]
    for i in range(2, len(figure.curves) + 1):
        header += [f"asymptotic_{i}", f"residual_{i}"]
    return header


def _curve_cells(
    consts: MathConstants, model: AsymptoticModel, n: int, value: float
) -> Tuple[str, str]:
    if n < model.min_n:
        return "", ""
    prediction = predictor(consts, model, n)
    return format_float(prediction), format_float(value - prediction)


def figure_rows(
    figure: FigureDef, table: PrimeTable, consts: MathConstants = constants
) -> List[List[str]]:
    series = figure.build(table, figure.nmax)
    rows = []
    for n in range(1, figure.nmax + 1):
        value = float(series[n])
        if not math.isfinite(value):
            raise InvalidArgumentError(f"{figure.figure_id}: non-finite value at n={n}")
        row = [str(n), format_float(value)]
        for model in figure.curves:
            row.extend(_curve_cells(consts, model, n, value))
        rows.append(row)
    return rows


def get_figure(figure_id: Optional[str]) -> FigureDef:
    if figure_id not in FIGURES:
        raise InvalidArgumentError(
            f"unknown figure id {figure_id!r}; choose one of {', '.join(FIGURES)}"
        )
    return FIGURES[figure_id]  # type: ignore[index]


def run_figure(figure_id: Optional[str], table: PrimeTable, out=None) -> int:
    figure = get_figure(figure_id)
    rows = figure_rows(figure, table)
    with open_output(out) as stream:
        write_csv(stream, figure_header(figure), rows)
    logger.info("Figure written", figure=figure.figure_id, rows=len(rows))
    return 0
