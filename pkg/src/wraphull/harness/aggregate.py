"""Aggregation helpers for Monte Carlo replicate outputs."""

from dataclasses import dataclass

import numpy as np

from ..errors import EmptyAggregate, ValidationError


@dataclass(frozen=True)
class AggregateResult:
    mean: float
    sd: float
    rmse: float
    se: float
    n: int


def aggregate(values, truth):
    """Mean, sample sd, RMSE around the truth, and standard error of the mean."""
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise EmptyAggregate("cannot aggregate zero replicates")
    mean = float(np.mean(v))
    sd = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    rmse = float(np.sqrt(np.mean((v - float(truth)) ** 2)))
    se = sd / np.sqrt(v.size)
    return AggregateResult(mean, sd, rmse, se, int(v.size))


def rmse_se(values, truth):
    """Standard error of the RMSE via the delta method on the mean of
    squared errors. Zero when the RMSE itself is zero."""
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise EmptyAggregate("cannot aggregate zero replicates")
    sq = (v - float(truth)) ** 2
    rmse = float(np.sqrt(np.mean(sq)))
    if rmse == 0.0 or v.size < 2:
        return 0.0
    sd_sq = float(np.std(sq, ddof=1))
    return sd_sq / (2.0 * rmse * np.sqrt(v.size))


@dataclass(frozen=True)
class RateFit:
    """Least-squares fit of log(y) on log(x)."""

    slope: float
    intercept: float
    r_squared: float


def fit_rate(x, y):
    """Fit log(y) = intercept + slope * log(x) by least squares."""
    x = np.asarray(list(x), dtype=float)
    y = np.asarray(list(y), dtype=float)
    if x.shape != y.shape or x.size < 2:
        raise ValidationError("rate fit needs two same-length vectors of at least 2 points")
    if np.any(x <= 0) or np.any(y <= 0):
        raise ValidationError("rate fit inputs must be strictly positive")
    lx = np.log(x)
    ly = np.log(y)
    slope, intercept = np.polyfit(lx, ly, 1)
    pred = intercept + slope * lx
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - np.mean(ly)) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return RateFit(float(slope), float(intercept), float(r2))
