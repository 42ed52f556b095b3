"""
Asymptotic predictors and residual reports against computed series.
"""
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple

from supernorm.core.errors import InvalidArgumentError
from supernorm.genfun.series import CoeffSeries
from supernorm.partitions.model import EnsembleSpec
from supernorm.primes.mertens import MathConstants, constants


class AsymptoticModel(str, Enum):
    """Main-term curves compared against the statistics (log is natural)."""
    LEHMER_LINEAR = "lehmer_linear"  # e^-gamma n
    LEHMER_CONST = "lehmer_const"  # e^-gamma
    LOG = "log"  # e^gamma log n
    LOG_LOGLOG = "log_loglog"  # e^gamma (log n + log log n)
    INV = "inv"  # e^gamma / n
    UNIT = "unit"
    IDENT = "ident"

    @property
    def min_n(self) -> int:
        return 2 if self is AsymptoticModel.LOG_LOGLOG else 1


def predictor(consts: MathConstants, model: AsymptoticModel, n: int) -> float:
    """The model's closed-form value at n."""
    model = AsymptoticModel(model)
    if n < model.min_n:
        raise InvalidArgumentError(f"{model.value} is undefined at n={n} (needs n >= {model.min_n})")

    if model is AsymptoticModel.LEHMER_LINEAR:
        return consts.e_neg_gamma_f * n
    if model is AsymptoticModel.LEHMER_CONST:
        return consts.e_neg_gamma_f
    if model is AsymptoticModel.LOG:
        return consts.e_gamma_f * math.log(n)
    if model is AsymptoticModel.LOG_LOGLOG:
        ln = math.log(n)
        return consts.e_gamma_f * (ln + math.log(ln))
    if model is AsymptoticModel.INV:
        return consts.e_gamma_f / n
    if model is AsymptoticModel.UNIT:
        return 1.0
    return float(n)


class ResidualRow(NamedTuple):
    n: int
    value: float
    prediction: float
    residual: float
    ratio: float


@dataclass(frozen=True)
class ResidualReport:
    """Rows of (n, value, prediction, value - prediction, value / prediction), ascending n."""

    label: str
    model: AsymptoticModel
    rows: Tuple[ResidualRow, ...]
    spec: Optional[EnsembleSpec] = None

    def ratios(self) -> List[float]:
        return [row.ratio for row in self.rows]


def residual_row(consts: MathConstants, model: AsymptoticModel, n: int, value: float) -> ResidualRow:
    prediction = predictor(consts, model, n)
    ratio = value / prediction if prediction != 0 else math.nan
    return ResidualRow(n, value, prediction, value - prediction, ratio)


def residual_report(
    series: CoeffSeries,
    model: AsymptoticModel,
    n_range: Tuple[int, int],
    consts: MathConstants = constants,
) -> ResidualReport:
    lo, hi = n_range
    if lo > hi or lo < 0 or hi > series.nmax:
        raise InvalidArgumentError(
            f"range [{lo}, {hi}] is outside the series (nmax={series.nmax})"
        )
    rows = tuple(
        residual_row(consts, model, n, float(series.values[n])) for n in range(lo, hi + 1)
    )
    return ResidualReport(label=series.label, model=AsymptoticModel(model), rows=rows, spec=series.spec)


def constant_notes(consts: MathConstants = constants) -> List[str]:
    """Numeric discrepancies worth flagging next to a text summary."""
    e_gamma_log7 = consts.e_gamma_f * math.log(7)
    return [
        f"e^gamma = {consts.e_gamma_f!r}, e^-gamma = {consts.e_neg_gamma_f!r}",
        (
            f"e^gamma log 7 = {e_gamma_log7:.4f} with gamma = {consts.gamma_f!r}; "
            "a bound of 3.3432 quoted for this product in the literature is too small, "
            "while the weaker bound < 4 still holds"
        ),
    ]
