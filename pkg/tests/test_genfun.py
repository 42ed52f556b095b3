"""
Tests for the generating-function evaluators and series transforms.
"""
import dataclasses
from fractions import Fraction

import pytest

from supernorm.core.errors import (
    InvalidArgumentError,
    OutOfRangeError,
    ResourceLimitError,
    UnsupportedError,
)
from supernorm.genfun import (
    Backend,
    CoeffSeries,
    cumulative,
    difference,
    max_norm_star,
    max_part_series,
    max_supernorm_cumulative,
    max_supernorm_individual,
    perimeter_series,
    series_for,
    series_from_exact_text,
    series_product,
    series_to_exact_text,
    size_series,
)
from supernorm.oracle import oracle_max_truncated, oracle_series
from supernorm.partitions import Ensemble, EnsembleSpec, Mode, Restriction, Weight
from supernorm.primes.sieve import build_prime_table

NORM, SN = Weight.NORM, Weight.SUPERNORM
ALL, NO_ONES, DISTINCT = Restriction.ALL, Restriction.NO_ONES, Restriction.DISTINCT
EXACT, FLOAT = Backend.EXACT, Backend.FLOAT


class TestKnownValues:
    def test_size(self, small_table):
        assert size_series(None, NORM, ALL, 1, 3)[3] == Fraction(11, 6)
        assert size_series(small_table, SN, ALL, 1, 3)[3] == Fraction(59, 120)
        assert size_series(None, NORM, DISTINCT, 1, 3)[3] == Fraction(5, 6)

    def test_size_no_ones_base_cases(self):
        series = size_series(None, NORM, NO_ONES, 1, 4)
        assert series.values[:2] == (Fraction(1), Fraction(0))
        # [4] and [2,2]
        assert series[4] == Fraction(1, 4) + Fraction(1, 4)

    def test_perimeter(self, small_table):
        assert perimeter_series(small_table, SN, ALL, 1, 2)[2] == Fraction(7, 12)
        assert perimeter_series(small_table, SN, ALL, 1, 3)[3] == Fraction(217, 360)
        assert perimeter_series(None, NORM, ALL, 1, 2)[2] == Fraction(3, 2)
        assert perimeter_series(None, NORM, ALL, 1, 3)[3] == Fraction(25, 12)
        assert perimeter_series(None, NORM, ALL, 1, 3)[0] == 0

    def test_cumulative_size_supernorm(self, small_table):
        assert cumulative(size_series(small_table, SN, ALL, 1, 2))[2] == Fraction(25, 12)

    def test_fixtures(self, small_table, fixture_series):
        w_hat = fixture_series("w_hat_size.txt")
        w = fixture_series("w_size.txt")
        assert list(size_series(small_table, SN, ALL, 1, len(w_hat) - 1)) == w_hat
        assert list(size_series(None, NORM, ALL, 1, len(w) - 1)) == w


@pytest.mark.parametrize("restriction", [ALL, NO_ONES, DISTINCT])
@pytest.mark.parametrize("weight", [NORM, SN])
@pytest.mark.parametrize("beta", [1, 2, 0, -1])
def test_dynamic_programs_match_oracle(small_table, restriction, weight, beta):
    nmax = 12
    specs = {
        ensemble: EnsembleSpec(ensemble=ensemble, weight=weight, restriction=restriction, beta=beta)
        for ensemble in (Ensemble.SIZE, Ensemble.PERIMETER)
    }
    expected = oracle_series(small_table, list(specs.values()), nmax)
    size = size_series(small_table, weight, restriction, beta, nmax)
    per = perimeter_series(small_table, weight, restriction, beta, nmax)
    assert list(size) == expected[specs[Ensemble.SIZE]]
    assert list(per) == expected[specs[Ensemble.PERIMETER]]


@pytest.mark.parametrize("restriction", [ALL, NO_ONES, DISTINCT])
@pytest.mark.parametrize("weight", [NORM, SN])
def test_float_backend_tracks_exact(small_table, restriction, weight):
    nmax = 60
    for build in (size_series, perimeter_series):
        exact = build(small_table, weight, restriction, 1, nmax, EXACT)
        approx = build(small_table, weight, restriction, 1, nmax, FLOAT)
        for n, (x, y) in enumerate(zip(exact, approx)):
            if x == 0:
                assert y == 0, n
            else:
                assert y == pytest.approx(float(x), rel=1e-12), n


@pytest.mark.parametrize("weight", [NORM, SN])
def test_float_perimeter_at_exact_cap(small_table, weight):
    exact = perimeter_series(small_table, weight, ALL, 1, 80, EXACT)
    approx = perimeter_series(small_table, weight, ALL, 1, 80, FLOAT)
    assert approx[0] == 0.0
    for n in range(1, 81):
        assert approx[n] == pytest.approx(float(exact[n]), rel=1e-12), n


def test_float_backend_handles_fractional_beta(small_table):
    series = size_series(small_table, SN, ALL, 0.5, 4, FLOAT)
    expected = sum(w**-0.5 for w in (7, 10, 9, 12, 16))
    assert series[4] == pytest.approx(expected, rel=1e-13)


def test_large_float_size_series(table):
    series = size_series(table, SN, ALL, 1, 2_000, FLOAT)
    assert len(series) == 2_001
    assert all(0 < v < 1 for v in series.values[1:])


class TestTransforms:
    def test_cumulative_then_difference(self, small_table):
        for build in (size_series, perimeter_series):
            series = build(small_table, SN, ALL, 1, 10)
            assert difference(cumulative(series)) == series

    def test_cumulative_of_zeros(self):
        spec = EnsembleSpec(ensemble=Ensemble.SIZE, weight=NORM)
        zeros = CoeffSeries(spec=spec, nmax=3, values=(Fraction(0),) * 4, backend=EXACT)
        assert cumulative(zeros).values == (Fraction(1),) * 4

    def test_mode_checks(self):
        series = size_series(None, NORM, ALL, 1, 3)
        with pytest.raises(InvalidArgumentError):
            difference(series)
        with pytest.raises(InvalidArgumentError):
            cumulative(cumulative(series))

    def test_float_cumulative(self, small_table):
        series = cumulative(size_series(small_table, SN, ALL, 1, 30, FLOAT))
        exact = cumulative(size_series(small_table, SN, ALL, 1, 30))
        assert series[30] == pytest.approx(float(exact[30]), rel=1e-13)

    def test_length_checked(self):
        with pytest.raises(InvalidArgumentError):
            CoeffSeries(spec=None, nmax=3, values=(Fraction(1),), backend=EXACT)

    def test_product(self, small_table):
        product = series_product(
            size_series(None, NORM, ALL, 1, 3), size_series(small_table, SN, ALL, 1, 3), name="ww"
        )
        assert product[3] == Fraction(649, 720)
        assert product.label == "ww"
        with pytest.raises(InvalidArgumentError):
            series_product(size_series(None, NORM, ALL, 1, 3), size_series(None, NORM, ALL, 1, 3, FLOAT))

    def test_exact_text(self, small_table):
        series = size_series(small_table, SN, ALL, 1, 5)
        text = series_to_exact_text(series)
        assert text.splitlines()[3] == "3;59/120"
        assert series_from_exact_text(text).values == series.values

    @pytest.mark.parametrize("text", ["", "0;1\n2;1/2\n", "0;x\n"])
    def test_exact_text_rejects(self, text):
        with pytest.raises(InvalidArgumentError):
            series_from_exact_text(text)


class TestLimits:
    def test_exact_caps(self, small_table):
        with pytest.raises(ResourceLimitError):
            size_series(None, NORM, ALL, 1, 121)
        with pytest.raises(ResourceLimitError):
            perimeter_series(None, NORM, ALL, 1, 81)

    def test_fractional_beta_needs_float(self):
        with pytest.raises(UnsupportedError):
            size_series(None, NORM, ALL, 0.5, 5)

    def test_supernorm_needs_primes(self):
        tiny = build_prime_table(10)
        with pytest.raises(OutOfRangeError):
            size_series(tiny, SN, ALL, 1, 5)
        with pytest.raises(UnsupportedError):
            size_series(None, SN, ALL, 1, 5)


class TestMaxPart:
    def test_supernorm_closed_forms(self, small_table):
        assert max_supernorm_cumulative(small_table, 0) == 1
        assert max_supernorm_cumulative(small_table, 1) == 2
        assert max_supernorm_cumulative(small_table, 3) == Fraction(15, 4)
        assert [max_supernorm_individual(small_table, n) for n in (1, 2, 3)] == [
            1,
            1,
            Fraction(3, 4),
        ]

    def test_series_agrees_with_closed_forms(self, small_table):
        cum = max_part_series(small_table, SN, ALL, 1, 10, mode=Mode.CUMULATIVE)
        ind = max_part_series(small_table, SN, ALL, 1, 10)
        for n in range(1, 11):
            assert cum[n] == max_supernorm_cumulative(small_table, n)
            assert ind[n] == max_supernorm_individual(small_table, n)
        flt = max_part_series(small_table, SN, ALL, 1, 10, FLOAT, Mode.CUMULATIVE)
        assert flt[10] == pytest.approx(float(cum[10]), rel=1e-13)

    def test_norm_without_ones(self):
        ind = max_part_series(None, NORM, NO_ONES, 1, 6)
        cum = max_part_series(None, NORM, NO_ONES, 1, 6, mode=Mode.CUMULATIVE)
        assert list(ind)[1:] == [max_norm_star(n) for n in range(1, 7)]
        assert list(cum)[1:] == [max_norm_star(n, Mode.CUMULATIVE) for n in range(1, 7)]
        assert max_norm_star(1) == 0 and max_norm_star(5) == 1

    def test_distinct_norm_counts_subsets(self):
        cum = max_part_series(None, NORM, DISTINCT, 1, 5, mode=Mode.CUMULATIVE)
        assert list(cum) == [Fraction(n + 1) for n in range(6)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_truncations_approach_closed_form(self, small_table, n):
        closed = max_supernorm_cumulative(small_table, n)
        previous = Fraction(0)
        for cutoff in range(0, 25, 6):
            partial = oracle_max_truncated(small_table, SN, ALL, n, cutoff, Mode.CUMULATIVE)
            assert previous <= partial <= closed
            previous = partial

    def test_divergent(self):
        with pytest.raises(UnsupportedError):
            max_part_series(None, NORM, ALL, 1, 5)
        with pytest.raises(UnsupportedError):
            max_part_series(None, NORM, NO_ONES, 0, 5)


def test_series_for_dispatch(small_table):
    spec = EnsembleSpec(
        ensemble=Ensemble.PERIMETER, weight=SN, mode=Mode.CUMULATIVE, restriction=ALL
    )
    series = series_for(small_table, spec, 2)
    assert series.spec == spec
    assert series[2] == Fraction(25, 12)
    max_spec = EnsembleSpec(ensemble=Ensemble.MAX_PART, weight=SN, mode=Mode.CUMULATIVE)
    assert series_for(small_table, max_spec, 3)[3] == Fraction(15, 4)


def test_series_is_frozen(small_table):
    series = size_series(small_table, SN, ALL, 1, 3)
    with pytest.raises(dataclasses.FrozenInstanceError):
        series.nmax = 4  # type: ignore[misc]
