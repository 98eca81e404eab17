"""Monte Carlo harness: experiment drivers, aggregation, CSV output."""

from .aggregate import AggregateResult, RateFit, aggregate, fit_rate, rmse_se
from .csvio import (
    EFRON_HEADER,
    ESTIMATE_HEADER,
    PI_HEADER,
    POLYTOPE_HEADER,
    TABLE1_HEADER,
    TABLE2_HEADER,
    format_row,
    manifest_path_for,
    write_manifest,
    write_rows,
)
from .experiments import (
    DEFAULT_LEPSKI,
    EXPERIMENT_NAMES,
    PI_N_VALUES,
    POLYTOPE_LAMBDAS,
    TABLE1_N_VALUES,
    TABLE1_R_VALUES,
    TABLE2_N_VALUES,
    ExperimentConfig,
    run_efron_check,
    run_pi_rates,
    run_polytope_rate,
    run_table1,
    run_table2_adaptive,
)
from .lambertw import lambert_w
from .raster import exact_missing_volume, hull_membership, missing_volume, raster_missing_volume
from .regions import REGION_NAMES, benchmark_region, regular_polygon_region

__all__ = [
    "AggregateResult",
    "DEFAULT_LEPSKI",
    "EFRON_HEADER",
    "ESTIMATE_HEADER",
    "EXPERIMENT_NAMES",
    "ExperimentConfig",
    "PI_HEADER",
    "PI_N_VALUES",
    "POLYTOPE_HEADER",
    "POLYTOPE_LAMBDAS",
    "RateFit",
    "REGION_NAMES",
    "TABLE1_HEADER",
    "TABLE1_N_VALUES",
    "TABLE1_R_VALUES",
    "TABLE2_HEADER",
    "TABLE2_N_VALUES",
    "aggregate",
    "benchmark_region",
    "exact_missing_volume",
    "fit_rate",
    "format_row",
    "hull_membership",
    "lambert_w",
    "manifest_path_for",
    "missing_volume",
    "raster_missing_volume",
    "regular_polygon_region",
    "rmse_se",
    "run_efron_check",
    "run_pi_rates",
    "run_polytope_rate",
    "run_table1",
    "run_table2_adaptive",
    "write_manifest",
    "write_rows",
]
