# Generating-function module
from supernorm.genfun.dispatch import series_for
from supernorm.genfun.dynamic import perimeter_series, size_series, weight_factors
from supernorm.genfun.max_part import (
    max_norm_star,
    max_part_series,
    max_supernorm_cumulative,
    max_supernorm_individual,
)
from supernorm.genfun.series import (
    Backend,
    CoeffSeries,
    cumulative,
    difference,
    series_from_exact_text,
    series_product,
    series_to_exact_text,
)

__all__ = [
    "Backend",
    "CoeffSeries",
    "cumulative",
    "difference",
    "max_norm_star",
    "max_part_series",
    "max_supernorm_cumulative",
    "max_supernorm_individual",
    "perimeter_series",
    "series_for",
    "series_from_exact_text",
    "series_product",
    "series_to_exact_text",
    "size_series",
    "weight_factors",
]
