"""wraphull: volume estimation from uniform point samples via wrapping hulls.

Build the tightest set of a chosen class around a sample (convex hull,
r-convex hull, fixed-normal polytope, sample range, or the sample
itself), then turn hull area and boundary/interior point counts into
estimates of the support's volume, with or without a known sampling
intensity. A Monte Carlo harness and a CLI reproduce the benchmark
tables shipped with the package.
"""

from . import config
from .base import PointSet, Window, unit_window
from .errors import (
    BadGrid,
    BadRadius,
    DegenerateHull,
    DuplicatePoints,
    EmptyAggregate,
    EmptySample,
    GeometryError,
    InconsistentHull,
    NotFittedError,
    UnboundedHull,
    ValidationError,
    WrapHullError,
    ZeroMeasure,
)
from .estimator_api import WrappingHullEstimator, check_is_fitted
from .estimators import (
    ESTIMATE_KINDS,
    HullStats,
    LepskiConfig,
    VolumeEstimate,
    classify,
    compact_oracle_estimate,
    data_driven_estimate,
    lepski_select,
    oracle_estimate,
    pi_estimators,
    select_radius,
    set_estimate_dilated,
)
from .geometry import (
    Annulus,
    ArcPolygon,
    CompactHull,
    ConvexPolygon,
    DifferenceRegion,
    Disk,
    HalfspaceHull,
    IntervalHull,
    IntervalRegion,
    PolygonRegion,
    Region,
    UnionRegion,
    compact_hull,
    convex_hull,
    dilate_hull,
    dump_hull,
    evenly_spaced_normals,
    fixed_normal_hull,
    interval_hull,
    load_hull,
    r_convex_hull,
    rconvex_profile,
)
from .sampling import (
    PppSample,
    RngConfig,
    parse_points_csv,
    points_to_csv,
    sample_ppp,
    sample_uniform_n,
)

__version__ = "0.1.0"

__all__ = [
    "Annulus",
    "ArcPolygon",
    "BadGrid",
    "BadRadius",
    "CompactHull",
    "ConvexPolygon",
    "DegenerateHull",
    "DifferenceRegion",
    "Disk",
    "DuplicatePoints",
    "ESTIMATE_KINDS",
    "EmptyAggregate",
    "EmptySample",
    "GeometryError",
    "HalfspaceHull",
    "HullStats",
    "InconsistentHull",
    "IntervalHull",
    "IntervalRegion",
    "LepskiConfig",
    "NotFittedError",
    "PointSet",
    "PolygonRegion",
    "PppSample",
    "Region",
    "RngConfig",
    "UnboundedHull",
    "UnionRegion",
    "ValidationError",
    "VolumeEstimate",
    "Window",
    "WrapHullError",
    "WrappingHullEstimator",
    "ZeroMeasure",
    "check_is_fitted",
    "classify",
    "compact_hull",
    "compact_oracle_estimate",
    "config",
    "convex_hull",
    "data_driven_estimate",
    "dilate_hull",
    "dump_hull",
    "evenly_spaced_normals",
    "fixed_normal_hull",
    "interval_hull",
    "lepski_select",
    "load_hull",
    "oracle_estimate",
    "parse_points_csv",
    "pi_estimators",
    "points_to_csv",
    "r_convex_hull",
    "rconvex_profile",
    "sample_ppp",
    "sample_uniform_n",
    "select_radius",
    "set_estimate_dilated",
    "unit_window",
    "__version__",
]
