# Asymptotics module
from supernorm.asymptotics.models import (
    AsymptoticModel,
    ResidualReport,
    ResidualRow,
    constant_notes,
    predictor,
    residual_report,
)
from supernorm.asymptotics.suites import (
    BandReport,
    ParityReport,
    conjecture_report,
    inequality_suite,
    load_ratio_band,
    parity_report,
    ratio_band_report,
)
from supernorm.asymptotics.window import (
    first_index_above,
    log_c_hat_max_prefix,
    mertens_window_check,
)

__all__ = [
    "AsymptoticModel",
    "BandReport",
    "ParityReport",
    "ResidualReport",
    "ResidualRow",
    "conjecture_report",
    "constant_notes",
    "first_index_above",
    "inequality_suite",
    "load_ratio_band",
    "log_c_hat_max_prefix",
    "mertens_window_check",
    "parity_report",
    "predictor",
    "ratio_band_report",
    "residual_report",
]
