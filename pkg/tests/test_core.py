"""
Tests for numeric helpers, errors and settings.
"""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from supernorm.core.config import Limits, Settings
from supernorm.core.errors import (
    InvalidArgumentError,
    OutOfRangeError,
    ResourceLimitError,
    SupernormError,
)
from supernorm.core.numeric import (
    CompensatedSum,
    PairwiseVectorSum,
    compensated_sum,
    format_exact,
    format_float,
    format_value,
    pairwise_sum,
    parse_exact,
)


def test_compensated_sum_recovers_cancelled_terms():
    assert compensated_sum([1e100, 1.0, -1e100]) == 1.0
    acc = CompensatedSum()
    for _ in range(10):
        acc += 0.1
    assert acc.value == 1.0


def test_pairwise_sum_keeps_exact_values():
    values = [Fraction(1, k) for k in range(1, 20)]
    assert pairwise_sum(values) == sum(values, Fraction(0))


def test_pairwise_vector_sum_matches_exact_sums():
    rng = np.random.default_rng(7)
    acc = PairwiseVectorSum(6)
    rows = []
    for start in range(1000):
        terms = rng.random(3) * 10.0 ** rng.integers(-8, 8)
        offset = start % 4
        acc.add(offset, terms)
        row = np.zeros(6)
        row[offset : offset + 3] = terms
        rows.append(row)
    assert acc.count == 1000
    # 1000 = 0b1111101000: one partial per set bit
    assert len(acc._levels) == 6
    expected = [math.fsum(column) for column in np.array(rows).T]
    assert acc.value.tolist() == pytest.approx(expected, rel=1e-14)
    assert PairwiseVectorSum(3).value.tolist() == [0.0, 0.0, 0.0]


@given(st.fractions())
def test_exact_text_inverse(q):
    assert parse_exact(format_exact(q)) == q


def test_formatting():
    assert format_exact(Fraction(3, 1)) == "3"
    assert format_exact(Fraction(-7, 12)) == "-7/12"
    assert format_float(0.1) == "0.1"
    assert format_value(Fraction(59, 120)) == "59/120"
    assert format_value(2) == "2"
    assert format_value(1 / 3, precision=4) == "0.3333"
    with pytest.raises(ValueError):
        parse_exact("  ")


def test_error_codes():
    err = OutOfRangeError("p_100 is beyond the sieve", required_limit=600)
    assert err.exit_code == 3
    assert "600" in str(err)
    assert isinstance(err, InvalidArgumentError) and isinstance(err, ValueError)
    assert InvalidArgumentError("x").exit_code == 2
    assert issubclass(ResourceLimitError, SupernormError)


def test_settings_from_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("SIEVE_CACHE_DIR", str(tmp_path))
    monkeypatch.setenv("WORKER_CONCURRENCY", "4")
    settings = Settings()
    assert settings.SIEVE_CACHE_DIR == tmp_path
    assert settings.WORKER_CONCURRENCY == 4


def test_limits_are_frozen():
    limits = Limits()
    assert limits.mertens_threshold == 2_278_383
    with pytest.raises(ValueError):
        limits.mertens_threshold = 0  # type: ignore[misc]
