"""Estimator facade with a fit/predict surface.

The class mirrors the common estimator protocol (constructor keyword
parameters, get_params/set_params, fit, predict on new points) without
depending on any external machine-learning package, so it can slot into
pipelines that only rely on the protocol.
"""

import numpy as np

from .base import PointSet
from .errors import NotFittedError, ValidationError
from .estimators import (
    LepskiConfig,
    classify,
    compact_oracle_estimate,
    data_driven_estimate,
    lepski_select,
    oracle_estimate,
)
from .geometry.compact import compact_hull
from .geometry.convex import convex_hull
from .geometry.halfspace import evenly_spaced_normals, fixed_normal_hull
from .geometry.interval import interval_hull
from .geometry.rconvex import r_convex_hull

HULL_CLASSES = ("convex", "rconvex", "fixed-normal", "compact", "interval")


def check_is_fitted(estimator):
    if getattr(estimator, "hull_", None) is None:
        raise NotFittedError("call fit before using this estimator")


class WrappingHullEstimator:
    """Volume estimator for the support of a uniform point sample.

    Parameters
    ----------
    hull_class : one of "convex", "rconvex", "fixed-normal", "compact",
        "interval".
    r : radius for the "rconvex" class; ignored otherwise.
    lepski : LepskiConfig for adaptive radius choice ("rconvex" only,
        used when r is None).
    normals : int (count of evenly spaced directions) or (k, 2) array of
        unit outward normals; "fixed-normal" only.
    intensity : known sampling intensity; enables the intensity-aware
        estimate and is required for the "compact" class.

    After fit: hull_, stats_, estimate_ (float volume estimate),
    oracle_estimate_ (when the intensity is known), r_hat_ and
    radius_profile_ (adaptive runs only).
    """

    _PARAM_NAMES = ("hull_class", "r", "lepski", "normals", "intensity")

    def __init__(self, hull_class="convex", r=None, lepski=None, normals=None, intensity=None):
        self.hull_class = hull_class
        self.r = r
        self.lepski = lepski
        self.normals = normals
        self.intensity = intensity
        self.hull_ = None

    # -- estimator protocol plumbing

    def get_params(self, deep=True):
        return {name: getattr(self, name) for name in self._PARAM_NAMES}

    def set_params(self, **params):
        for name, value in params.items():
            if name not in self._PARAM_NAMES:
                raise ValidationError(f"unknown parameter {name!r}")
            setattr(self, name, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items() if v is not None)
        return f"{type(self).__name__}({args})"

    # -- fitting

    def _check_params(self):
        if self.hull_class not in HULL_CLASSES:
            raise ValidationError(
                f"unknown hull class {self.hull_class!r}; known: {', '.join(HULL_CLASSES)}"
            )
        if self.hull_class == "rconvex" and self.r is None and self.lepski is None:
            raise ValidationError("the rconvex class needs r or a lepski config")
        if self.hull_class == "fixed-normal" and self.normals is None:
            raise ValidationError("the fixed-normal class needs normals")
        if self.hull_class == "compact" and self.intensity is None:
            raise ValidationError("the compact class estimates N/intensity and needs the intensity")
        if self.lepski is not None and not isinstance(self.lepski, LepskiConfig):
            raise ValidationError("lepski must be a LepskiConfig")

    def _resolve_normals(self):
        if isinstance(self.normals, (int, np.integer)):
            return evenly_spaced_normals(int(self.normals))
        return np.asarray(self.normals, dtype=float)

    def fit(self, X, y=None):
        self._check_params()
        points = X if isinstance(X, PointSet) else PointSet(np.asarray(X, dtype=float))
        points.require_nonempty()
        self.r_hat_ = None
        self.radius_profile_ = None
        if self.hull_class == "convex":
            hull = convex_hull(points)
        elif self.hull_class == "rconvex":
            radius = self.r
            if radius is None:
                r_hat, _, per_r = lepski_select(points, self.lepski)
                self.r_hat_ = r_hat
                self.radius_profile_ = per_r
                radius = r_hat
            hull = r_convex_hull(points, radius)
        elif self.hull_class == "fixed-normal":
            hull = fixed_normal_hull(points, self._resolve_normals())
        elif self.hull_class == "compact":
            hull = compact_hull(points)
        else:
            hull = interval_hull(points)

        stats = classify(points, hull)
        self.points_ = points
        self.hull_ = hull
        self.stats_ = stats
        self.hull_area_ = hull.area()
        if self.hull_class == "compact":
            est = compact_oracle_estimate(stats.n_total, self.intensity)
            self.oracle_estimate_ = est.value
            self.estimate_ = est.value
        else:
            self.estimate_ = data_driven_estimate(stats, self.hull_area_).value
            self.oracle_estimate_ = (
                oracle_estimate(stats, self.hull_area_, self.intensity).value
                if self.intensity is not None
                else None
            )
        return self

    # -- post-fit queries

    def predict(self, X):
        """Boolean membership of new points in the fitted hull."""
        check_is_fitted(self)
        coords = np.asarray(X, dtype=float)
        if self.points_.dim == 1:
            return np.asarray(self.hull_.contains(coords.reshape(-1)), dtype=bool)
        coords = np.atleast_2d(coords)
        hull = self.hull_
        if hasattr(hull, "contains_many"):
            return np.asarray(hull.contains_many(coords), dtype=bool)
        try:
            out = hull.contains(coords)
            out = np.asarray(out, dtype=bool)
            if out.shape == (len(coords),):
                return out
        except (TypeError, ValueError, IndexError):
            pass
        return np.array([bool(hull.contains(p)) for p in coords])

    def score(self, X, y=None):
        """Fraction of the given points inside the fitted hull."""
        return float(np.mean(self.predict(X)))
