"""
Tests for the brute-force oracle against hand-computed values.
"""
from fractions import Fraction

import pytest

from supernorm.core.errors import ResourceLimitError, UnsupportedError
from supernorm.oracle import oracle_max_truncated, oracle_series, oracle_stat, oracle_stat_float
from supernorm.partitions import Ensemble, EnsembleSpec, Mode, Restriction, Weight, ensemble_count


def spec(ensemble, weight, mode=Mode.INDIVIDUAL, restriction=Restriction.ALL, beta=1):
    return EnsembleSpec(
        ensemble=ensemble, weight=weight, mode=mode, restriction=restriction, beta=beta
    )


SIZE, PER, MAX = Ensemble.SIZE, Ensemble.PERIMETER, Ensemble.MAX_PART
NORM, SN = Weight.NORM, Weight.SUPERNORM


@pytest.mark.parametrize(
    "s, n, expected",
    [
        (spec(SIZE, NORM), 3, Fraction(11, 6)),
        (spec(SIZE, SN), 3, Fraction(59, 120)),
        (spec(PER, SN), 2, Fraction(7, 12)),
        (spec(PER, SN), 3, Fraction(217, 360)),
        (spec(PER, NORM), 2, Fraction(3, 2)),
        (spec(SIZE, SN, Mode.CUMULATIVE), 2, Fraction(25, 12)),
        (spec(SIZE, NORM, Mode.CUMULATIVE, Restriction.NO_ONES), 3, Fraction(11, 6)),
        (spec(SIZE, NORM, restriction=Restriction.DISTINCT), 3, Fraction(5, 6)),
        (spec(SIZE, NORM, Mode.CUMULATIVE), 0, Fraction(1)),
        (spec(PER, NORM), 0, Fraction(0)),
        (spec(PER, NORM, Mode.CUMULATIVE), 0, Fraction(1)),
    ],
)
def test_known_values(small_table, s, n, expected):
    assert oracle_stat(small_table, s, n) == expected


def test_series_matches_pointwise(small_table):
    specs = [
        spec(SIZE, SN),
        spec(SIZE, SN, Mode.CUMULATIVE),
        spec(SIZE, NORM, beta=2),
        spec(PER, NORM, restriction=Restriction.NO_ONES),
    ]
    series = oracle_series(small_table, specs, 8)
    for s in specs:
        assert series[s] == [oracle_stat(small_table, s, n) for n in range(9)]


def test_exact_size_fixture(small_table, fixture_series):
    expected = fixture_series("w_hat_size.txt")
    series = oracle_series(small_table, [spec(SIZE, SN)], len(expected) - 1)
    assert list(series.values())[0] == expected


@pytest.mark.parametrize("ensemble", [SIZE, PER])
@pytest.mark.parametrize("restriction", list(Restriction))
def test_beta_zero_counts(small_table, ensemble, restriction):
    s = spec(ensemble, SN, restriction=restriction, beta=0)
    for n in range(1, 10):
        assert oracle_stat(small_table, s, n) == ensemble_count(s, n)


def test_negative_beta(small_table):
    # sum of norms of the partitions of 3: 3 + 2 + 1
    assert oracle_stat(small_table, spec(SIZE, NORM, beta=-1), 3) == 6


def test_float_twin(small_table):
    s = spec(SIZE, SN, beta=1.5)
    value = oracle_stat_float(small_table, s, 4)
    expected = sum(w**-1.5 for w in (7, 10, 9, 12, 16))
    assert value == pytest.approx(expected, rel=1e-14)
    assert oracle_stat_float(small_table, spec(SIZE, SN), 3) == pytest.approx(59 / 120, rel=1e-15)


def test_norm_series_without_table():
    assert oracle_stat(None, spec(SIZE, NORM), 5) == Fraction(27, 10)


class TestScope:
    def test_max_part_rejected(self, small_table):
        with pytest.raises(UnsupportedError):
            oracle_stat(small_table, spec(MAX, SN), 3)

    def test_caps(self, small_table):
        with pytest.raises(ResourceLimitError):
            oracle_stat(small_table, spec(SIZE, NORM), 31)
        with pytest.raises(ResourceLimitError):
            oracle_series(small_table, [spec(PER, NORM)], 23)

    def test_fractional_beta_needs_float_twin(self, small_table):
        with pytest.raises(UnsupportedError):
            oracle_stat(small_table, spec(SIZE, NORM, beta=0.5), 3)


class TestTruncatedMaxPart:
    def test_geometric_sums(self, small_table):
        assert oracle_max_truncated(
            small_table, SN, Restriction.ALL, 1, 20, Mode.CUMULATIVE
        ) == 2 - Fraction(1, 2**20)
        assert oracle_max_truncated(
            small_table, NORM, Restriction.NO_ONES, 2, 40
        ) == 1 - Fraction(1, 2**20)
        assert oracle_max_truncated(small_table, SN, Restriction.ALL, 1, 10) == 1 - Fraction(1, 2**10)

    def test_distinct_is_finite(self, small_table):
        # every subset of {1, 2, 3} fits under the cutoff
        full = oracle_max_truncated(small_table, NORM, Restriction.DISTINCT, 3, 6, Mode.CUMULATIVE)
        assert full == Fraction(1) * (1 + 1) * (1 + Fraction(1, 2)) * (1 + Fraction(1, 3))

    def test_nondecreasing_in_cutoff(self, small_table):
        values = [
            oracle_max_truncated(small_table, SN, Restriction.ALL, 3, c, Mode.CUMULATIVE)
            for c in range(0, 25, 4)
        ]
        assert values == sorted(values)
        assert values[-1] < Fraction(15, 4)

    def test_divergent_rejected(self, small_table):
        with pytest.raises(UnsupportedError):
            oracle_max_truncated(small_table, NORM, Restriction.ALL, 2, 10)
        with pytest.raises(UnsupportedError):
            oracle_max_truncated(small_table, SN, Restriction.ALL, 2, 10, beta=-1)
