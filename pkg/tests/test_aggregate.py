"""Aggregation statistics against plain fsum arithmetic, plus the rate
fitter and the Lambert W evaluation."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wraphull.errors import EmptyAggregate, ValidationError
from wraphull.harness.aggregate import aggregate, fit_rate, rmse_se
from wraphull.harness.lambertw import lambert_w


def aggregate_oracle(values, truth):
    """Textbook formulas with compensated summation, no numpy."""
    n = len(values)
    mean = math.fsum(values) / n
    if n > 1:
        var = math.fsum((v - mean) ** 2 for v in values) / (n - 1)
        sd = math.sqrt(var)
    else:
        sd = 0.0
    rmse = math.sqrt(math.fsum((v - truth) ** 2 for v in values) / n)
    se = sd / math.sqrt(n)
    return mean, sd, rmse, se


def test_aggregate_matches_fsum_oracle():
    gen = np.random.default_rng(600)
    for _ in range(50):
        n = int(gen.integers(1, 400))
        values = (gen.normal(3.0, 2.0, n) * 10.0 ** gen.integers(-3, 4)).tolist()
        truth = float(gen.normal(3.0, 2.0))
        got = aggregate(values, truth)
        mean, sd, rmse, se = aggregate_oracle(values, truth)
        assert got.mean == pytest.approx(mean, rel=1e-10, abs=1e-12)
        assert got.sd == pytest.approx(sd, rel=1e-10, abs=1e-12)
        assert got.rmse == pytest.approx(rmse, rel=1e-10, abs=1e-12)
        assert got.se == pytest.approx(se, rel=1e-10, abs=1e-12)
        assert got.n == n


def test_aggregate_empty_raises():
    with pytest.raises(EmptyAggregate):
        aggregate([], 0.0)
    with pytest.raises(EmptyAggregate):
        rmse_se([], 0.0)


def test_rmse_se_delta_method():
    gen = np.random.default_rng(601)
    values = gen.normal(1.0, 0.3, 250).tolist()
    truth = 1.1
    sq = [(v - truth) ** 2 for v in values]
    n = len(values)
    mean_sq = math.fsum(sq) / n
    sd_sq = math.sqrt(math.fsum((s - mean_sq) ** 2 for s in sq) / (n - 1))
    want = sd_sq / (2.0 * math.sqrt(mean_sq) * math.sqrt(n))
    assert rmse_se(values, truth) == pytest.approx(want, rel=1e-10)
    # exact estimates give zero spread
    assert rmse_se([2.0, 2.0, 2.0], 2.0) == 0.0
    assert rmse_se([1.5], 2.0) == 0.0


@given(
    # keep the slope away from zero: r-squared is meaningless for flat data
    st.floats(min_value=-3.0, max_value=3.0).filter(lambda s: abs(s) > 0.05),
    st.floats(min_value=0.05, max_value=4.0),
    st.integers(min_value=0, max_value=2**31 - 1),
)
@settings(max_examples=50)
def test_fit_rate_recovers_exact_power_law(slope, scale, seed):
    x = np.array([10.0, 20.0, 50.0, 100.0, 400.0])
    y = scale * x**slope
    fit = fit_rate(x, y)
    assert fit.slope == pytest.approx(slope, abs=1e-9)
    assert fit.intercept == pytest.approx(np.log(scale), abs=1e-9)
    assert fit.r_squared == pytest.approx(1.0, abs=1e-7)


def test_fit_rate_noise_reduces_r_squared():
    gen = np.random.default_rng(33)
    x = np.array([10.0, 20.0, 50.0, 100.0, 400.0, 1000.0])
    y = 3.0 * x**-0.5 * np.exp(gen.normal(0, 0.2, x.size))
    fit = fit_rate(x, y)
    assert fit.slope == pytest.approx(-0.5, abs=0.3)
    assert fit.r_squared < 1.0


def test_fit_rate_validation():
    with pytest.raises(ValidationError):
        fit_rate([1.0], [1.0])
    with pytest.raises(ValidationError):
        fit_rate([1.0, 2.0], [1.0, -2.0])
    with pytest.raises(ValidationError):
        fit_rate([1.0, 2.0, 3.0], [1.0, 2.0])


def test_lambert_w_fixed_points():
    assert lambert_w(0.0) == 0.0
    assert abs(lambert_w(np.e) - 1.0) <= 1e-12
    assert lambert_w(2.0 * np.exp(2.0)) == pytest.approx(2.0, abs=1e-12)
    with pytest.raises(ValidationError):
        lambert_w(-0.1)
    with pytest.raises(ValidationError):
        lambert_w(float("nan"))


@given(st.floats(min_value=1e-12, max_value=1e12))
@settings(max_examples=200)
def test_lambert_w_inverts_w_exp_w(z):
    w = lambert_w(z)
    assert w >= 0.0
    assert w * math.exp(w) == pytest.approx(z, rel=1e-11)


def test_lambert_w_monotone():
    zs = np.logspace(-6, 6, 60)
    ws = [lambert_w(z) for z in zs]
    assert all(b > a for a, b in zip(ws, ws[1:]))
