"""Hulls with fixed outer normal directions.

Given unit directions u_1..u_k, the hull of a sample is the tightest
polytope {x : <u_j, x> <= h_j} containing it, so h_j is just the maximum
of <u_j, X_i> over the sample. The polygon is intersected with the
window. Vertices are enumerated by intersecting constraint boundary
lines pairwise and keeping the feasible intersections.
"""

import numpy as np

from .. import config
from ..base import PointSet, Window
from ..errors import EmptySample, UnboundedHull, ValidationError
from .convex import ConvexPolygon, convex_hull


class HalfspaceHull:
    kind = "fixed-normal"

    def __init__(self, normals, offsets, polygon, window, bounded=True):
        self.normals = np.asarray(normals, dtype=float)
        self.offsets = np.asarray(offsets, dtype=float)
        self.polygon = polygon
        self.window = window
        self.bounded = bounded

    @property
    def k(self):
        return len(self.normals)

    def area(self):
        return self.polygon.area()

    def contains(self, coords, eps=None):
        eps = config.epsilon(eps)
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        ok = np.all(coords @ self.normals.T <= self.offsets + eps, axis=1)
        ok &= self.window.contains(coords, eps=eps)
        return ok

    def active_constraint(self, coords, eps=None):
        """True per point when some facet constraint holds with equality."""
        eps = config.epsilon(eps)
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        slack = self.offsets - coords @ self.normals.T
        return np.any(slack <= eps, axis=1)

    def __repr__(self):
        return f"HalfspaceHull(k={self.k}, area={self.area():.6g}, bounded={self.bounded})"


def evenly_spaced_normals(k, phase=0.0):
    """k unit vectors at equal angular spacing, starting from the given phase."""
    k = int(k)
    if k < 1:
        raise ValidationError("need at least one normal direction")
    angles = phase + 2.0 * np.pi * np.arange(k) / k
    out = np.column_stack([np.cos(angles), np.sin(angles)])
    # snap values that should be exact so axis boxes come out crisp
    out[np.abs(out) < 1e-15] = 0.0
    out[np.abs(out - 1.0) < 1e-15] = 1.0
    out[np.abs(out + 1.0) < 1e-15] = -1.0
    return out


def _positively_spanning(normals):
    angles = np.sort(np.arctan2(normals[:, 1], normals[:, 0]))
    gaps = np.diff(np.concatenate([angles, [angles[0] + 2.0 * np.pi]]))
    return float(np.max(gaps)) < np.pi - 1e-12


def _vertex_enumeration(normals, offsets, tol=1e-10):
    """Vertices of {x : <u_j, x> <= h_j} for a bounded constraint system."""
    k = len(normals)
    candidates = []
    for i in range(k):
        for j in range(i + 1, k):
            a = np.array([normals[i], normals[j]])
            det = a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0]
            if abs(det) < 1e-14:
                continue
            x = np.linalg.solve(a, np.array([offsets[i], offsets[j]]))
            candidates.append(x)
    if not candidates:
        return np.zeros((0, 2))
    pts = np.array(candidates)
    feasible = np.all(pts @ normals.T <= offsets + tol, axis=1)
    pts = pts[feasible]
    if len(pts) == 0:
        return pts
    return np.unique(np.round(pts, 12), axis=0)


def fixed_normal_hull(points, normals, eps=None):
    """Tightest fixed-normal polytope around the sample, window clipped.

    Raises UnboundedHull when the normals do not positively span the
    plane; the window-clipped result is attached to the exception.
    """
    if isinstance(points, PointSet):
        if points.dim != 2:
            raise ValidationError("fixed_normal_hull needs 2-dimensional points")
        points.require_nonempty()
        coords = points.coords
        window = points.window
    else:
        coords = np.asarray(points, dtype=float)
        if len(coords) == 0:
            raise EmptySample("fixed_normal_hull needs at least one point")
        window = Window(dim=2)

    normals = np.asarray(normals, dtype=float)
    if normals.ndim != 2 or normals.shape[1] != 2 or len(normals) == 0:
        raise ValidationError("normals must form a (k, 2) array")
    lengths = np.linalg.norm(normals, axis=1)
    if np.any(np.abs(lengths - 1.0) > 1e-12):
        raise ValidationError("every normal must be a unit vector (within 1e-12)")

    offsets = np.max(coords @ normals.T, axis=0)

    b = window.bounds
    window_normals = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    window_offsets = np.array([b[0, 1], -b[0, 0], b[1, 1], -b[1, 0]])
    all_normals = np.vstack([normals, window_normals])
    all_offsets = np.concatenate([offsets, window_offsets])

    vertices = _vertex_enumeration(all_normals, all_offsets)
    if len(vertices) == 0:
        # numerically collapsed feasible set; fall back to the sample corner
        vertices = coords[[0]]
    polygon = convex_hull(vertices) if len(vertices) > 1 else ConvexPolygon(vertices, _validate=False)

    bounded = _positively_spanning(normals)
    hull = HalfspaceHull(normals, offsets, polygon, window, bounded=bounded)
    if not bounded:
        raise UnboundedHull(
            "normals do not positively span the plane; result is window clipped",
            hull=hull,
        )
    return hull
