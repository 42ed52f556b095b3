"""
Shared fixtures: session-scoped prime tables.
"""
from fractions import Fraction
from pathlib import Path
from typing import List

import pytest

from supernorm.core.numeric import parse_exact
from supernorm.primes.sieve import PrimeTable, build_prime_table

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def small_table() -> PrimeTable:
    return build_prime_table(10_000)


@pytest.fixture(scope="session")
def table() -> PrimeTable:
    return build_prime_table(1_000_000)


@pytest.fixture(scope="session")
def mertens_table() -> PrimeTable:
    """Reaches past the 2,278,383 threshold of the Mertens estimates."""
    return build_prime_table(2_400_000)


@pytest.fixture(scope="session")
def fixture_series():
    """Load an exact `n;num/den` fixture from tests/fixtures as a list of Fractions."""

    def load(name: str) -> List[Fraction]:
        values: List[Fraction] = []
        for line in (FIXTURES / name).read_text(encoding="utf-8").splitlines():
            if not line.strip() or line.startswith("#"):
                continue
            n, value = line.split(";")
            assert int(n) == len(values)
            values.append(parse_exact(value))
        return values

    return load


@pytest.fixture(scope="session")
def fixture_rows():
    """Load a `;`-separated fixture from tests/fixtures as lists of fields."""

    def load(name: str) -> List[List[str]]:
        lines = (FIXTURES / name).read_text(encoding="utf-8").splitlines()
        return [line.split(";") for line in lines if line.strip() and not line.startswith("#")]

    return load
