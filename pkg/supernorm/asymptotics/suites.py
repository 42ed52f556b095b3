"""
Inequality suites over computed series, plus descriptive conjecture, parity and band reports.

Suites return BoundReport records like the explicit prime-estimate scans.
Exact series are compared exactly; float series allow a relative tolerance
of FLOAT_TOLERANCE before an equality or tie is counted as a violation.
"""
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Callable, List, Optional, Tuple, Union

from supernorm.asymptotics.models import (
    AsymptoticModel,
    ResidualReport,
    residual_report,
)
from supernorm.core.logging import get_logger
from supernorm.genfun.max_part import max_norm_star, max_part_series
from supernorm.genfun.series import Backend, CoeffSeries, cumulative, series_product
from supernorm.genfun.dynamic import perimeter_series, size_series
from supernorm.partitions.model import Mode, Restriction, Weight
from supernorm.primes.bounds import BoundReport, MarginTracker
from supernorm.primes.mertens import MathConstants, constants
from supernorm.primes.sieve import PrimeTable

logger = get_logger(__name__)

Value = Union[Fraction, float]

FLOAT_TOLERANCE = 1e-12

WITNESS_N = 14


def _slack(value: Value, scale: Value, backend: Backend) -> float:
    """Margin as reported; float backends get the tolerance credited."""
    if backend is Backend.EXACT:
        return float(value)
    return float(value) + FLOAT_TOLERANCE * max(abs(float(scale)), 1.0)


class _SuiteTracker(MarginTracker):
    """MarginTracker that also records where an inequality is strict."""

    def __init__(self, bound_name: str, n_range: Tuple[int, int], backend: Backend):
        super().__init__(bound_name, n_range)
        self.backend = backend
        self.strict: List[int] = []

    def _is_strict(self, diff: Value, scale: Value) -> bool:
        if self.backend is Backend.EXACT:
            return diff > 0
        return float(diff) > FLOAT_TOLERANCE * max(abs(float(scale)), 1.0)

    def gap(self, lower: Value, upper: Value, n: int) -> None:
        """Record lower <= upper at n."""
        diff = upper - lower
        self.update(_slack(diff, upper, self.backend), n)
        if self._is_strict(diff, upper):
            self.strict.append(n)

    def chain(self, lower: Value, middle: Value, upper: Value, n: int) -> None:
        """Record lower <= middle <= upper at n; the margin is the smaller of the two gaps."""
        low_gap = middle - lower
        high_gap = upper - middle
        low_margin = _slack(low_gap, middle, self.backend)
        high_margin = _slack(high_gap, upper, self.backend)
        self.update(min(low_margin, high_margin), n)
        if self._is_strict(low_gap, middle) and self._is_strict(high_gap, upper):
            self.strict.append(n)

    def equal(self, left: Value, right: Value, n: int) -> None:
        diff = abs(left - right)
        if self.backend is Backend.EXACT:
            self.update(-float(diff) if diff else 0.0, n)
        else:
            self.update(FLOAT_TOLERANCE * max(abs(float(right)), 1.0) - float(diff), n)

    def report(self) -> BoundReport:
        base = super().report()
        return BoundReport(
            bound_name=base.bound_name,
            range=base.range,
            all_hold=base.all_hold,
            worst_margin=base.worst_margin,
            worst_at=base.worst_at,
            checked=base.checked,
            strict_at=tuple(self.strict),
            start_margin=base.start_margin,
            start_at=base.start_at,
        )


@dataclass(frozen=True)
class SuiteSeries:
    """The series every inequality suite draws on, built once."""

    w_hat_size: CoeffSeries
    w_hat_per: CoeffSeries
    c_hat_size: CoeffSeries
    c_hat_per: CoeffSeries
    c_hat_max: CoeffSeries
    w_size: CoeffSeries
    w_per: CoeffSeries
    c_star_size: CoeffSeries
    c_star_per: CoeffSeries


def build_suite_series(table: PrimeTable, nmax: int, backend: Backend = Backend.EXACT) -> SuiteSeries:
    sn, nm = Weight.SUPERNORM, Weight.NORM
    w_hat_size = size_series(table, sn, Restriction.ALL, 1, nmax, backend)
    w_hat_per = perimeter_series(table, sn, Restriction.ALL, 1, nmax, backend)
    return SuiteSeries(
        w_hat_size=w_hat_size,
        w_hat_per=w_hat_per,
        c_hat_size=cumulative(w_hat_size),
        c_hat_per=cumulative(w_hat_per),
        c_hat_max=max_part_series(table, sn, Restriction.ALL, 1, nmax, backend, Mode.CUMULATIVE),
        w_size=size_series(None, nm, Restriction.ALL, 1, nmax, backend),
        w_per=perimeter_series(None, nm, Restriction.ALL, 1, nmax, backend),
        c_star_size=cumulative(size_series(None, nm, Restriction.NO_ONES, 1, nmax, backend)),
        c_star_per=cumulative(perimeter_series(None, nm, Restriction.NO_ONES, 1, nmax, backend)),
    )


def _scan(
    name: str,
    nmax: int,
    backend: Backend,
    check: Callable[[_SuiteTracker, int], None],
    start: int = 1,
) -> BoundReport:
    tracker = _SuiteTracker(name, (start, nmax), backend)
    for n in range(start, nmax + 1):
        check(tracker, n)
    return tracker.report()


def supernorm_chain(s: SuiteSeries, nmax: int, backend: Backend) -> List[BoundReport]:
    """C^_size(n) <= C^_per(n) <= C^_max(n), strictness recorded per n."""
    return [
        _scan(
            "c-hat-size<=c-hat-per", nmax, backend,
            lambda t, n: t.gap(s.c_hat_size[n], s.c_hat_per[n], n),
        ),
        _scan(
            "c-hat-per<=c-hat-max", nmax, backend,
            lambda t, n: t.gap(s.c_hat_per[n], s.c_hat_max[n], n),
        ),
    ]


def norm_identities(s: SuiteSeries, nmax: int, backend: Backend) -> List[BoundReport]:
    """W_size = C*_size and W_per = C*_per."""
    return [
        _scan("w-size=c-star-size", nmax, backend, lambda t, n: t.equal(s.w_size[n], s.c_star_size[n], n)),
        _scan("w-per=c-star-per", nmax, backend, lambda t, n: t.equal(s.w_per[n], s.c_star_per[n], n)),
    ]


def norm_chain(s: SuiteSeries, nmax: int, backend: Backend) -> List[BoundReport]:
    """W_per(n) <= n, and W_size(n) <= W_per(n) <= C*_max(n) = n."""

    def chain(t: _SuiteTracker, n: int) -> None:
        t.chain(s.w_size[n], s.w_per[n], max_norm_star(n, Mode.CUMULATIVE), n)

    return [
        _scan("w-per<=n", nmax, backend, lambda t, n: t.gap(s.w_per[n], n, n)),
        _scan("w-size<=w-per<=c-star-max", nmax, backend, chain),
    ]


def witness_report(s: SuiteSeries, n: int = WITNESS_N) -> BoundReport:
    """W^_size(n) > W^_per(n): the size-per ordering fails for individual statistics."""
    diff = s.w_hat_size[n] - s.w_hat_per[n]
    return BoundReport(
        bound_name=f"w-hat-size({n})>w-hat-per({n})",
        range=(n, n),
        all_hold=diff > 0,
        worst_margin=float(diff),
        worst_at=n,
        checked=1,
        strict_at=(n,) if diff > 0 else (),
    )


def inequality_suite(
    table: PrimeTable, nmax: int, backend: Backend = Backend.EXACT
) -> List[BoundReport]:
    """Cumulative supernorm chain, norm identities, W_per <= n, norm chain and the n=14 witness."""
    backend = Backend(backend)
    s = build_suite_series(table, max(nmax, WITNESS_N), backend)
    reports = (
        supernorm_chain(s, nmax, backend)
        + norm_identities(s, nmax, backend)
        + norm_chain(s, nmax, backend)
        + [witness_report(s)]
    )
    logger.info(
        "Inequality suite finished",
        nmax=nmax,
        backend=backend.value,
        failed=[r.bound_name for r in reports if not r.all_hold],
    )
    return reports


def conjecture_report(
    table: PrimeTable,
    nmax: int,
    backend: Backend = Backend.FLOAT,
    consts: MathConstants = constants,
) -> List[ResidualReport]:
    """Ratios n W^(n)/e^gamma for size, perimeter and max-part, and the product W_size W^_size.

    Descriptive only; no verdict is attached.
    """
    sn = Weight.SUPERNORM
    w_hat_size = size_series(table, sn, Restriction.ALL, 1, nmax, backend)
    w_hat_per = perimeter_series(table, sn, Restriction.ALL, 1, nmax, backend)
    w_hat_max = max_part_series(table, sn, Restriction.ALL, 1, nmax, backend)
    w_size = size_series(None, Weight.NORM, Restriction.ALL, 1, nmax, backend)
    product = series_product(w_size, w_hat_size, name="w-size*w-hat-size")

    span = (1, nmax)
    return [
        residual_report(w_hat_size, AsymptoticModel.INV, span, consts),
        residual_report(w_hat_per, AsymptoticModel.INV, span, consts),
        residual_report(w_hat_max, AsymptoticModel.INV, span, consts),
        residual_report(product, AsymptoticModel.UNIT, span, consts),
    ]


@dataclass(frozen=True)
class ParityReport:
    """(k, W(2k), W(2k+1), odd value smaller) per k in range."""

    label: str
    rows: Tuple[Tuple[int, float, float, bool], ...]

    @property
    def odd_smaller(self) -> int:
        return sum(1 for row in self.rows if row[3])


def parity_report(series: CoeffSeries, n_range: Optional[Tuple[int, int]] = None) -> ParityReport:
    """Compare W(2k+1) with W(2k); the values split into an even and an odd line."""
    lo, hi = n_range or (0, series.nmax)
    hi = min(hi, series.nmax)
    rows = []
    for k in range((lo + 1) // 2, (hi - 1) // 2 + 1):
        even, odd = series[2 * k], series[2 * k + 1]
        rows.append((k, float(even), float(odd), odd < even))
    return ParityReport(label=series.label, rows=tuple(rows))


@dataclass(frozen=True)
class BandReport:
    """Whether every ratio value/prediction over the range stays inside band."""

    label: str
    model: AsymptoticModel
    band: Tuple[float, float]
    n_range: Tuple[int, int]
    min_ratio: float
    max_ratio: float

    @property
    def inside(self) -> bool:
        return self.band[0] <= self.min_ratio and self.max_ratio <= self.band[1]


def ratio_band_report(
    series: CoeffSeries,
    model: AsymptoticModel,
    n_range: Tuple[int, int],
    band: Tuple[float, float],
    consts: MathConstants = constants,
) -> BandReport:
    report = residual_report(series, model, n_range, consts)
    ratios = report.ratios()
    return BandReport(
        label=report.label,
        model=report.model,
        band=band,
        n_range=n_range,
        min_ratio=min(ratios),
        max_ratio=max(ratios),
    )



RATIO_BAND_FILE = "w_size_ratio_band.txt"


def load_ratio_band(name: str = RATIO_BAND_FILE) -> Tuple[Tuple[int, int], Tuple[float, float]]:
    """Read the recorded (n range, band) for W_size(n) / (e^-gamma n)."""
    text = resources.files("supernorm.asymptotics").joinpath(name).read_text(encoding="utf-8")
    rows = [line for line in text.splitlines() if line.strip() and not line.startswith("#")]
    if len(rows) != 1:
        raise ValueError(f"{name}: expected one data row, found {len(rows)}")
    n_lo, n_hi, lo, hi = rows[0].split(";")
    return (int(n_lo), int(n_hi)), (float(lo), float(hi))
