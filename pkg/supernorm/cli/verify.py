"""
`verify`: the fixed sequence of verification suites with a [PASS]/[FAIL] text report.

Suites run in a fixed order and their lines are written in that order even
when WORKER_CONCURRENCY allows them to run on several threads.
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence

from supernorm.asymptotics.models import AsymptoticModel, constant_notes
from supernorm.asymptotics.suites import (
    SuiteSeries,
    build_suite_series,
    load_ratio_band,
    norm_chain,
    norm_identities,
    ratio_band_report,
    supernorm_chain,
    witness_report,
    WITNESS_N,
)
from supernorm.cli.output import open_output
from supernorm.core.config import limits, settings
from supernorm.core.logging import get_logger, log_suite_event
from supernorm.core.numeric import format_value
from supernorm.genfun import Backend, CoeffSeries, cumulative, max_norm_star, max_part_series
from supernorm.genfun.dynamic import perimeter_series, size_series
from supernorm.genfun.max_part import max_supernorm_cumulative
from supernorm.oracle import oracle_series
from supernorm.partitions.enumerate import enumerate_by_supernorm_bound
from supernorm.partitions.model import Ensemble, EnsembleSpec, Mode, Restriction, Weight
from supernorm.partitions.statistics import supernorm
from supernorm.primes.bounds import BoundReport
from supernorm.primes.sieve import PrimeTable
from supernorm.schemas import RunConfig

logger = get_logger(__name__)

# W^_size(14) ~ 0.19381 and W^_per(14) ~ 0.19288.
WITNESS_SIZE_BAND = (0.193805, 0.193815)
WITNESS_PER_BAND = (0.192875, 0.192885)

RATIO_BAND_RANGE, RATIO_BAND = load_ratio_band()


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str

    @property
    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass
class VerifyPlan:
    """Suite ranges, reduced together by `verify --nmax`."""

    oracle_nmax: int = limits.verify_oracle_nmax
    chain_nmax: int = limits.verify_chain_nmax
    float_perimeter_nmax: int = limits.verify_float_perimeter_nmax
    closed_form_nmax: int = limits.verify_closed_form_nmax
    exact_product_nmax: int = limits.verify_exact_product_nmax
    bijection_bound: int = limits.verify_bijection_bound

    @classmethod
    def from_config(cls, config: RunConfig) -> "VerifyPlan":
        plan = cls()
        if config.nmax is None:
            return plan
        cap = config.nmax
        return cls(
            oracle_nmax=min(plan.oracle_nmax, cap),
            chain_nmax=min(plan.chain_nmax, cap),
            float_perimeter_nmax=min(plan.float_perimeter_nmax, cap),
            closed_form_nmax=min(plan.closed_form_nmax, cap),
            exact_product_nmax=min(plan.exact_product_nmax, cap),
            bijection_bound=plan.bijection_bound,
        )


@dataclass
class VerifyContext:
    table: PrimeTable
    plan: VerifyPlan
    suite_series: SuiteSeries
    precision: int = 12
    oracle: Dict[EnsembleSpec, List[Fraction]] = field(default_factory=dict)


def oracle_specs() -> List[EnsembleSpec]:
    """Every finite spec compared against the oracle, norm before supernorm, individual first."""
    return [
        EnsembleSpec(ensemble=e, weight=w, mode=m, restriction=r, beta=b)
        for e, r, w, m, b in product(
            (Ensemble.SIZE, Ensemble.PERIMETER),
            (Restriction.ALL, Restriction.NO_ONES, Restriction.DISTINCT),
            (Weight.NORM, Weight.SUPERNORM),
            (Mode.INDIVIDUAL, Mode.CUMULATIVE),
            (1, 2),
        )
    ]


def _dp_series(table: PrimeTable, spec: EnsembleSpec, nmax: int) -> CoeffSeries:
    build = size_series if spec.ensemble is Ensemble.SIZE else perimeter_series
    series = build(table, spec.weight, spec.restriction, spec.beta, nmax, Backend.EXACT)
    return cumulative(series) if spec.mode is Mode.CUMULATIVE else series


def _first_mismatch(expected: Sequence[Fraction], got: Sequence) -> Optional[int]:
    for n in range(len(expected)):
        if expected[n] != got[n]:
            return n
    return None


def suite_oracle_equivalence(ctx: VerifyContext) -> SuiteResult:
    nmax = ctx.plan.oracle_nmax
    specs = oracle_specs()
    ctx.oracle.update(oracle_series(ctx.table, specs, nmax))
    for spec in specs:
        expected = ctx.oracle[spec]
        got = _dp_series(ctx.table, spec, nmax).values
        n = _first_mismatch(expected, got)
        if n is not None:
            return SuiteResult(
                "oracle-equivalence",
                False,
                f"{spec.label} n={n} expected {format_value(expected[n])} "
                f"got {format_value(got[n])}",
            )
    return SuiteResult(
        "oracle-equivalence", True, f"{len(specs)} series agree exactly for n <= {nmax}"
    )


def _reports_result(name: str, reports: Sequence[BoundReport], what: str) -> SuiteResult:
    failed = [r for r in reports if not r.all_hold]
    if failed:
        r = failed[0]
        return SuiteResult(
            name, False, f"{r.bound_name} fails, worst at n={r.worst_at} (margin {r.worst_margin!r})"
        )
    return SuiteResult(name, True, what)


def suite_identities(ctx: VerifyContext) -> SuiteResult:
    nmax = ctx.plan.oracle_nmax
    reports = norm_identities(ctx.suite_series, nmax, Backend.EXACT)
    return _reports_result(
        "norm-identities", reports, f"W_size = C*_size and W_per = C*_per exactly for n <= {nmax}"
    )


def suite_supernorm_chain(ctx: VerifyContext) -> SuiteResult:
    nmax = ctx.plan.chain_nmax
    reports = supernorm_chain(ctx.suite_series, nmax, Backend.EXACT)
    result = _reports_result("supernorm-chain", reports, "")
    if result.passed:
        size_per, per_max = reports
        strict = sorted(set(size_per.strict_at) & set(per_max.strict_at))
        onset = strict[0] if strict else None
        result.detail = (
            f"C^_size <= C^_per <= C^_max for 1 <= n <= {nmax}; strict from n={onset}"
        )
    return result


def suite_w_per(ctx: VerifyContext) -> SuiteResult:
    oracle_nmax = ctx.plan.oracle_nmax
    spec = EnsembleSpec(ensemble=Ensemble.PERIMETER, weight=Weight.NORM)
    values = ctx.oracle.get(spec) or oracle_series(None, [spec], oracle_nmax)[spec]
    for n in range(1, oracle_nmax + 1):
        if values[n] > n:
            return SuiteResult(
                "w-per<=n", False, f"oracle n={n} expected <= {n} got {format_value(values[n])}"
            )

    float_nmax = ctx.plan.float_perimeter_nmax
    approx = perimeter_series(None, Weight.NORM, Restriction.ALL, 1, float_nmax, Backend.FLOAT)
    for n in range(1, float_nmax + 1):
        if approx[n] > n:
            return SuiteResult(
                "w-per<=n", False, f"float DP n={n} expected <= {n} got {approx[n]!r}"
            )

    chain = norm_chain(ctx.suite_series, ctx.plan.chain_nmax, Backend.EXACT)
    return _reports_result(
        "w-per<=n",
        chain,
        f"oracle to n={oracle_nmax}, float DP to n={float_nmax}, "
        f"W_size <= W_per <= C*_max to n={ctx.plan.chain_nmax}",
    )


def suite_closed_forms(ctx: VerifyContext) -> SuiteResult:
    name = "max-part-closed-forms"
    nmax = ctx.plan.closed_form_nmax
    star = max_part_series(None, Weight.NORM, Restriction.NO_ONES, 1, nmax, Backend.EXACT)
    star_cum = max_part_series(
        None, Weight.NORM, Restriction.NO_ONES, 1, nmax, Backend.EXACT, Mode.CUMULATIVE
    )
    for n in range(nmax + 1):
        for got, mode in ((star[n], Mode.INDIVIDUAL), (star_cum[n], Mode.CUMULATIVE)):
            expected = max_norm_star(n, mode)
            if got != expected:
                return SuiteResult(
                    name, False,
                    f"{mode.value} n={n} expected {format_value(expected)} got {format_value(got)}",
                )

    pmax = ctx.plan.exact_product_nmax
    c_hat = max_part_series(
        ctx.table, Weight.SUPERNORM, Restriction.ALL, 1, pmax, Backend.EXACT, Mode.CUMULATIVE
    )
    for n in range(pmax + 1):
        expected = max_supernorm_cumulative(ctx.table, n, Backend.EXACT)
        if c_hat[n] != expected:
            return SuiteResult(
                name, False,
                f"C^_max n={n} expected {format_value(expected)} got {format_value(c_hat[n])}",
            )
    return SuiteResult(
        name, True,
        f"W*_max and C*_max = n for n <= {nmax}; C^_max matches the prime product for n <= {pmax}",
    )


def suite_bijection(ctx: VerifyContext) -> SuiteResult:
    bound = ctx.plan.bijection_bound
    values = sorted(supernorm(ctx.table, lam) for lam in enumerate_by_supernorm_bound(ctx.table, bound))
    for expected, got in enumerate(values, start=1):
        if got != expected:
            return SuiteResult(
                "supernorm-bijection", False, f"n={expected} expected {expected} got {got}"
            )
    if len(values) != bound:
        return SuiteResult(
            "supernorm-bijection", False, f"expected {bound} partitions got {len(values)}"
        )
    return SuiteResult(
        "supernorm-bijection", True, f"supernorms of {bound} partitions are exactly 1..{bound}"
    )


def suite_witness(ctx: VerifyContext) -> SuiteResult:
    s = ctx.suite_series
    size_v, per_v = float(s.w_hat_size[WITNESS_N]), float(s.w_hat_per[WITNESS_N])
    report = witness_report(s)
    inside = (
        WITNESS_SIZE_BAND[0] <= size_v <= WITNESS_SIZE_BAND[1]
        and WITNESS_PER_BAND[0] <= per_v <= WITNESS_PER_BAND[1]
    )
    p = ctx.precision
    detail = f"W^_size({WITNESS_N}) = {size_v:.{p}g}, W^_per({WITNESS_N}) = {per_v:.{p}g}"
    return SuiteResult("w-hat-witness", report.all_hold and inside, detail)


SUITES: List[Callable[[VerifyContext], SuiteResult]] = [
    suite_oracle_equivalence,
    suite_identities,
    suite_supernorm_chain,
    suite_w_per,
    suite_closed_forms,
    suite_bijection,
    suite_witness,
]


def _run_logged(suite: Callable[[VerifyContext], SuiteResult], ctx: VerifyContext) -> SuiteResult:
    log_suite_event(logger, suite.__name__, "started")
    result = suite(ctx)
    log_suite_event(logger, result.name, "passed" if result.passed else "failed")
    return result


def run_suites(ctx: VerifyContext, workers: int = 1) -> List[SuiteResult]:
    # the oracle fills ctx.oracle for the W_per suite, so it always runs first
    first = _run_logged(SUITES[0], ctx)
    rest = SUITES[1:]
    if workers <= 1:
        return [first] + [_run_logged(s, ctx) for s in rest]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(_run_logged, s, ctx) for s in rest]
        return [first] + [f.result() for f in futures]


def suite_ratio_band(ctx: VerifyContext) -> Optional[SuiteResult]:
    """W_size(n)/(e^-gamma n) against the recorded band; None when the run stops short of it."""
    w_size = ctx.suite_series.w_size
    if w_size.nmax < RATIO_BAND_RANGE[1]:
        return None
    band = ratio_band_report(w_size, AsymptoticModel.LEHMER_LINEAR, RATIO_BAND_RANGE, RATIO_BAND)
    lo, hi = RATIO_BAND_RANGE
    detail = (
        f"W_size(n)/(e^-gamma n) for {lo} <= n <= {hi} spans "
        f"[{band.min_ratio:.6f}, {band.max_ratio:.6f}], "
        f"{'inside' if band.inside else 'outside'} [{RATIO_BAND[0]}, {RATIO_BAND[1]}]"
    )
    return SuiteResult("w-size-ratio-band", band.inside, detail)


def notes() -> List[str]:
    return [f"[NOTE] {note}" for note in constant_notes()]


def run_verify(config: RunConfig, table: PrimeTable) -> int:
    plan = VerifyPlan.from_config(config)
    ctx = VerifyContext(
        table=table,
        plan=plan,
        suite_series=build_suite_series(table, max(plan.chain_nmax, plan.oracle_nmax, WITNESS_N)),
        precision=config.precision,
    )
    results = run_suites(ctx, settings.WORKER_CONCURRENCY)
    band = suite_ratio_band(ctx)
    if band is not None:
        results.append(band)
    passed = all(r.passed for r in results)

    with open_output(config.out) as stream:
        for r in results:
            stream.write(r.line + "\n")
        for line in notes():
            stream.write(line + "\n")
        stream.write(f"{sum(r.passed for r in results)}/{len(results)} suites passed\n")
    return 0 if passed else 1
