"""
Tests for the asymptotic predictors, inequality suites and the C^_max window.
"""
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from supernorm.asymptotics import (
    AsymptoticModel,
    conjecture_report,
    constant_notes,
    first_index_above,
    inequality_suite,
    load_ratio_band,
    log_c_hat_max_prefix,
    mertens_window_check,
    parity_report,
    predictor,
    ratio_band_report,
    residual_report,
)
from supernorm.asymptotics.suites import build_suite_series, norm_chain
from supernorm.core.errors import InvalidArgumentError, OutOfRangeError
from supernorm.genfun import Backend, max_part_series, max_supernorm_cumulative, size_series
from supernorm.partitions import Mode, Restriction, Weight
from supernorm.primes.mertens import constants

E_GAMMA = 1.7810724179901979
E_NEG_GAMMA = 0.5614594835668851


class TestPredictors:
    def test_values(self):
        assert predictor(constants, AsymptoticModel.LEHMER_LINEAR, 10) == pytest.approx(10 * E_NEG_GAMMA)
        assert predictor(constants, AsymptoticModel.LEHMER_CONST, 7) == pytest.approx(E_NEG_GAMMA)
        assert predictor(constants, AsymptoticModel.LOG, 7) == pytest.approx(E_GAMMA * math.log(7))
        assert predictor(constants, AsymptoticModel.INV, 4) == pytest.approx(E_GAMMA / 4)
        assert predictor(constants, AsymptoticModel.UNIT, 17) == 1.0
        assert predictor(constants, AsymptoticModel.IDENT, 17) == 17.0
        assert predictor(constants, AsymptoticModel.LOG_LOGLOG, 3) == pytest.approx(
            E_GAMMA * (math.log(3) + math.log(math.log(3)))
        )

    def test_loglog_undefined_at_one(self):
        with pytest.raises(InvalidArgumentError):
            predictor(constants, AsymptoticModel.LOG_LOGLOG, 1)

    def test_constant_notes(self):
        notes = constant_notes()
        assert len(notes) == 2
        assert "3.4658" in notes[1]


class TestResiduals:
    def test_c_hat_max_row(self, small_table):
        series = max_part_series(small_table, Weight.SUPERNORM, Restriction.ALL, 1, 5, mode=Mode.CUMULATIVE)
        report = residual_report(series, AsymptoticModel.LOG_LOGLOG, (2, 5))
        row = report.rows[1]
        assert row.n == 3
        assert row.value == 3.75
        assert row.residual == pytest.approx(row.value - row.prediction)
        assert row.ratio == pytest.approx(row.value / row.prediction)
        assert [r.n for r in report.rows] == [2, 3, 4, 5]

    def test_range_checked(self, small_table):
        series = size_series(None, Weight.NORM, Restriction.ALL, 1, 5)
        with pytest.raises(InvalidArgumentError):
            residual_report(series, AsymptoticModel.LEHMER_LINEAR, (1, 6))

    def test_conjecture_rows(self, small_table):
        size_inv, per_inv, max_inv, product = conjecture_report(small_table, 10)
        # n W^_max(n) / e^gamma at n = 3 is 9/4 / e^gamma
        assert max_inv.rows[2].ratio == pytest.approx(2.25 / E_GAMMA, rel=1e-12)
        assert product.label == "w-size*w-hat-size"
        assert product.rows[2].value == pytest.approx(649 / 720, rel=1e-12)
        assert size_inv.rows[0].n == 1 and len(per_inv.rows) == 10

    def test_lehmer_ratio_band(self, fixture_rows):
        n_range, band = load_ratio_band()
        assert n_range == (60, 70)
        assert band[1] - band[0] < 0.01
        series = size_series(None, Weight.NORM, Restriction.ALL, 1, 70)
        report = ratio_band_report(series, AsymptoticModel.LEHMER_LINEAR, n_range, band)
        assert report.inside

        (lo, hi, observed_min, observed_max), = fixture_rows("w_size_ratio_observed.txt")
        assert (int(lo), int(hi)) == n_range
        assert report.min_ratio == pytest.approx(float(observed_min), abs=2e-5)
        assert report.max_ratio == pytest.approx(float(observed_max), abs=2e-5)

    def test_ratio_band_rejects_shifted_series(self):
        n_range, band = load_ratio_band()
        series = size_series(None, Weight.NORM, Restriction.ALL, 1, 70)
        shifted = ratio_band_report(
            series, AsymptoticModel.LEHMER_LINEAR, n_range, (band[0] + 0.01, band[1] + 0.01)
        )
        assert not shifted.inside

    def test_parity(self, small_table):
        series = size_series(small_table, Weight.SUPERNORM, Restriction.ALL, 1, 5)
        report = parity_report(series, (0, 5))
        assert [row[0] for row in report.rows] == [0, 1, 2]
        assert report.odd_smaller == 3


class TestInequalitySuite:
    @pytest.fixture(scope="class")
    def reports(self, table):
        return {r.bound_name: r for r in inequality_suite(table, 70)}

    def test_all_hold(self, reports):
        assert len(reports) == 7
        assert all(r.all_hold for r in reports.values())

    def test_chain_strict_from_three(self, reports):
        strict = reports["c-hat-size<=c-hat-per"].strict_at
        assert strict[0] == 3
        assert strict == tuple(range(3, 71))

    def test_identities_exact(self, reports):
        assert reports["w-size=c-star-size"].worst_margin == 0.0
        assert reports["w-per=c-star-per"].worst_margin == 0.0

    def test_witness(self, table):
        reports = inequality_suite(table, 5)
        witness = reports[-1]
        assert witness.bound_name == "w-hat-size(14)>w-hat-per(14)"
        assert witness.all_hold

    def test_witness_values(self, table):
        size = size_series(table, Weight.SUPERNORM, Restriction.ALL, 1, 14)[14]
        assert 0.193805 <= float(size) <= 0.193815

    def test_norm_chain_margin_is_smaller_gap(self, table):
        s = build_suite_series(table, 12)
        chain = norm_chain(s, 12, Backend.EXACT)[1]
        gaps = [
            min(float(s.w_per[n] - s.w_size[n]), float(n - s.w_per[n])) for n in range(1, 13)
        ]
        assert chain.bound_name == "w-size<=w-per<=c-star-max"
        assert chain.worst_margin == min(gaps)
        assert chain.worst_at == 1 + gaps.index(min(gaps))

    def test_float_backend_agrees(self, table):
        reports = inequality_suite(table, 70, Backend.FLOAT)
        assert all(r.all_hold for r in reports)


class TestWindow:
    @pytest.fixture(scope="class")
    def prefix(self, table):
        return log_c_hat_max_prefix(table, table.count)

    @hyp_settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=1, max_value=2_000))
    def test_prefix_matches_exact_product(self, table, prefix, n):
        expected = float(max_supernorm_cumulative(table, n, Backend.EXACT))
        assert math.exp(prefix[n - 1]) == pytest.approx(expected, rel=1e-11)

    @hyp_settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=1, max_value=78_498))
    def test_prefix_matches_product_from_scratch(self, table, prefix, n):
        expected = max_supernorm_cumulative(table, n, Backend.FLOAT)
        assert math.exp(prefix[n - 1]) == pytest.approx(expected, rel=1e-11)

    def test_prefix_matches_closed_form(self, table):
        prefix = log_c_hat_max_prefix(table, 5000)
        for n in (1, 3, 50, 5000):
            expected = math.log(float(max_supernorm_cumulative(table, n, Backend.FLOAT)))
            assert prefix[n - 1] == pytest.approx(expected, rel=1e-11)
        assert math.exp(prefix[2]) == pytest.approx(float(Fraction(15, 4)), rel=1e-14)

    def test_prefix_beyond_table(self, small_table):
        with pytest.raises(OutOfRangeError):
            log_c_hat_max_prefix(small_table, small_table.count + 1)

    def test_window_needs_threshold(self, table):
        with pytest.raises(InvalidArgumentError):
            mertens_window_check(table, (10, 20))

    def test_first_index_above(self, small_table):
        assert first_index_above(small_table, 29) == 10
        assert first_index_above(small_table, 28) == 10
        with pytest.raises(OutOfRangeError):
            first_index_above(small_table, 20_000)

    @pytest.mark.slow
    def test_window_holds(self, mertens_table):
        lo = first_index_above(mertens_table, 2_278_383)
        report = mertens_window_check(mertens_table, (lo, mertens_table.count))
        assert report.bound_name == "c-hat-max-window"
        assert report.all_hold
        assert report.worst_margin > 1e-11
