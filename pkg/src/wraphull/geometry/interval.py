"""The one-dimensional hull is just the sample range."""

import numpy as np

from ..base import PointSet
from ..errors import EmptySample, ValidationError


class IntervalHull:
    kind = "interval"

    def __init__(self, low, high):
        self.low = float(low)
        self.high = float(high)

    def area(self):
        """Length of the interval (the 1D volume)."""
        return self.high - self.low

    def contains(self, coords, eps=0.0):
        coords = np.asarray(coords, dtype=float).reshape(-1)
        return (coords >= self.low - eps) & (coords <= self.high + eps)

    def __repr__(self):
        return f"IntervalHull([{self.low}, {self.high}])"


def interval_hull(points):
    """Smallest closed interval containing a 1D sample."""
    if isinstance(points, PointSet):
        if points.dim != 1:
            raise ValidationError("interval_hull needs 1-dimensional points")
        points.require_nonempty()
        values = points.coords[:, 0]
    else:
        values = np.asarray(points, dtype=float).reshape(-1)
        if len(values) == 0:
            raise EmptySample("interval_hull needs at least one point")
    return IntervalHull(np.min(values), np.max(values))
