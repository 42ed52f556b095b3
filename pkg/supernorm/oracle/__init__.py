# Oracle module
from supernorm.oracle.brute_force import (
    oracle_max_truncated,
    oracle_series,
    oracle_stat,
    oracle_stat_float,
)

__all__ = [
    "oracle_max_truncated",
    "oracle_series",
    "oracle_stat",
    "oracle_stat_float",
]
