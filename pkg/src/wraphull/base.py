"""Observation window and point-sample containers."""

import numpy as np

from .errors import DuplicatePoints, EmptySample, ValidationError


class Window:
    """Axis-aligned observation window in dimension 1 or 2.

    bounds is a (dim, 2) array of [low, high] per axis. The default is the
    unit cube for the given dimension.
    """

    def __init__(self, dim=2, bounds=None):
        dim = int(dim)
        if dim not in (1, 2):
            raise ValidationError(f"window dimension must be 1 or 2, got {dim}")
        if bounds is None:
            bounds = np.tile([0.0, 1.0], (dim, 1))
        bounds = np.asarray(bounds, dtype=float)
        if bounds.shape != (dim, 2):
            raise ValidationError(f"window bounds must have shape ({dim}, 2)")
        if not np.all(np.isfinite(bounds)):
            raise ValidationError("window bounds must be finite")
        if np.any(bounds[:, 1] <= bounds[:, 0]):
            raise ValidationError("window bounds must have positive length per axis")
        self.dim = dim
        self.bounds = bounds
        self.bounds.setflags(write=False)

    def area(self):
        return float(np.prod(self.bounds[:, 1] - self.bounds[:, 0]))

    def diameter(self):
        return float(np.linalg.norm(self.bounds[:, 1] - self.bounds[:, 0]))

    def contains(self, coords, eps=0.0):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        lo = self.bounds[:, 0] - eps
        hi = self.bounds[:, 1] + eps
        return np.all((coords >= lo) & (coords <= hi), axis=1)

    def corners(self):
        """Window corner coordinates; for dim 2, in counter-clockwise order."""
        b = self.bounds
        if self.dim == 1:
            return np.array([[b[0, 0]], [b[0, 1]]])
        return np.array(
            [
                [b[0, 0], b[1, 0]],
                [b[0, 1], b[1, 0]],
                [b[0, 1], b[1, 1]],
                [b[0, 0], b[1, 1]],
            ]
        )

    def __eq__(self, other):
        return (
            isinstance(other, Window)
            and self.dim == other.dim
            and np.array_equal(self.bounds, other.bounds)
        )

    def __repr__(self):
        return f"Window(dim={self.dim}, bounds={self.bounds.tolist()})"


def unit_window(dim=2):
    return Window(dim=dim)


class PointSet:
    """An ordered sample of distinct points inside a window.

    coords is an (n, dim) float array. Exact duplicates are rejected:
    under the sampling models they occur with probability zero, and the
    hull constructions assume distinct sites.
    """

    def __init__(self, coords, window=None):
        coords = np.asarray(coords, dtype=float)
        if coords.ndim == 1:
            coords = coords.reshape(-1, 1)
        if coords.ndim != 2 or coords.shape[1] not in (1, 2):
            raise ValidationError(
                f"points must form an (n, 1) or (n, 2) array, got shape {coords.shape}"
            )
        if window is None:
            window = Window(dim=coords.shape[1])
        if window.dim != coords.shape[1]:
            raise ValidationError(
                f"point dimension {coords.shape[1]} does not match window dimension {window.dim}"
            )
        if coords.size and not np.all(np.isfinite(coords)):
            raise ValidationError("point coordinates must be finite")
        if coords.size and not np.all(window.contains(coords)):
            raise ValidationError("all points must lie inside the window")
        if len(coords) > 1:
            unique = np.unique(coords, axis=0)
            if len(unique) != len(coords):
                raise DuplicatePoints("duplicate points are not allowed")
        self.coords = coords.copy()
        self.coords.setflags(write=False)
        self.window = window

    def __len__(self):
        return len(self.coords)

    @property
    def dim(self):
        return self.window.dim

    def require_nonempty(self):
        if len(self) == 0:
            raise EmptySample("operation requires at least one point")

    def __repr__(self):
        return f"PointSet(n={len(self)}, dim={self.dim})"
