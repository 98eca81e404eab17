"""Hull for the class of all compact sets: the sample itself."""

import numpy as np

from ..base import PointSet
from ..errors import EmptySample, ValidationError


class CompactHull:
    """The tightest compact set around a sample is the sample."""

    kind = "compact"

    def __init__(self, coords):
        self.coords = np.asarray(coords, dtype=float)

    def area(self):
        return 0.0

    def contains(self, coords, eps=1e-12):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        out = np.zeros(len(coords), dtype=bool)
        for i, p in enumerate(coords):
            out[i] = bool(np.any(np.linalg.norm(self.coords - p, axis=1) <= eps))
        return out


def compact_hull(points):
    if isinstance(points, PointSet):
        points.require_nonempty()
        if points.dim != 2:
            raise ValidationError("compact_hull is wired for 2-dimensional samples")
        return CompactHull(points.coords)
    coords = np.asarray(points, dtype=float)
    if len(coords) == 0:
        raise EmptySample("compact_hull needs at least one point")
    return CompactHull(coords)
