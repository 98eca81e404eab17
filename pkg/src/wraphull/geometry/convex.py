"""Convex hulls via Andrew's monotone chain, and centroid dilation."""

import numpy as np

from .. import config
from ..base import PointSet
from ..errors import DegenerateHull, EmptySample, ValidationError
from .predicates import (
    point_segment_distance,
    points_in_convex_polygon,
    polygon_centroid,
    shoelace_area,
)


class ConvexPolygon:
    """A convex polygon stored as a counter-clockwise vertex loop.

    Degenerate shapes are allowed: a single vertex or a two-vertex segment
    both have area zero. For three or more vertices the loop must be
    strictly convex; collinear interior vertices are not kept.
    """

    kind = "convex"

    def __init__(self, vertices, _validate=True):
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise ValidationError("polygon vertices must form an (m, 2) array")
        if len(v) == 0:
            raise ValidationError("polygon needs at least one vertex")
        if _validate and len(v) >= 3:
            if shoelace_area(v) < 0:
                v = v[::-1]
            rolled_prev = np.roll(v, 1, axis=0)
            rolled_next = np.roll(v, -1, axis=0)
            cross = (v[:, 0] - rolled_prev[:, 0]) * (rolled_next[:, 1] - rolled_prev[:, 1]) - (
                v[:, 1] - rolled_prev[:, 1]
            ) * (rolled_next[:, 0] - rolled_prev[:, 0])
            if np.any(cross <= config.EPSILON):
                raise ValidationError("vertex loop is not strictly convex")
        self.vertices = v.copy()
        self.vertices.setflags(write=False)

    def area(self):
        return abs(shoelace_area(self.vertices))

    def perimeter(self):
        v = self.vertices
        if len(v) < 2:
            return 0.0
        return float(np.sum(np.linalg.norm(np.roll(v, -1, axis=0) - v, axis=1)))

    def centroid(self):
        if self.area() == 0.0:
            raise DegenerateHull("zero-area polygon has no area centroid")
        return polygon_centroid(self.vertices)

    def contains(self, coords, eps=None):
        eps = config.epsilon(eps)
        return points_in_convex_polygon(coords, self.vertices, eps)

    def boundary_distance(self, p):
        """Distance from p to the nearest point of the vertex loop."""
        v = self.vertices
        if len(v) == 1:
            return float(np.linalg.norm(np.asarray(p, float) - v[0]))
        return min(
            point_segment_distance(p, v[i], v[(i + 1) % len(v)]) for i in range(len(v))
        )

    def __repr__(self):
        return f"ConvexPolygon(n_vertices={len(self.vertices)}, area={self.area():.6g})"


def _monotone_chain(coords):
    """Indices of hull vertices in counter-clockwise order.

    Collinear points are dropped, so the result is strictly convex. For
    fully collinear input the two extreme points remain.
    """
    n = len(coords)
    order = np.lexsort((coords[:, 1], coords[:, 0]))
    if n == 1:
        return [int(order[0])]
    eps = config.EPSILON

    def build(seq):
        chain = []
        for idx in seq:
            p = coords[idx]
            while len(chain) >= 2:
                o = coords[chain[-2]]
                a = coords[chain[-1]]
                turn = (a[0] - o[0]) * (p[1] - o[1]) - (a[1] - o[1]) * (p[0] - o[0])
                if turn <= eps:
                    chain.pop()
                else:
                    break
            chain.append(int(idx))
        return chain

    lower = build(order)
    upper = build(order[::-1])
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 0:
        hull = [int(order[0]), int(order[-1])]
    elif len(hull) == 1:
        # every point collinear: keep the two extremes
        lo, hi = int(order[0]), int(order[-1])
        hull = [lo] if lo == hi else [lo, hi]
    return hull


def convex_hull(points):
    """Smallest convex polygon containing the sample.

    Accepts a PointSet or an (n, 2) array. Degenerate inputs (one point,
    collinear points) give a zero-area polygon listing the extreme points.
    """
    if isinstance(points, PointSet):
        if points.dim != 2:
            raise ValidationError("convex_hull needs 2-dimensional points")
        points.require_nonempty()
        coords = points.coords
    else:
        coords = np.asarray(points, dtype=float)
        if len(coords) == 0:
            raise EmptySample("convex_hull needs at least one point")
    idx = _monotone_chain(coords)
    return ConvexPolygon(coords[idx], _validate=False)


def dilate_hull(hull, factor):
    """Scale a convex polygon about its area centroid by the given factor."""
    factor = float(factor)
    if not np.isfinite(factor) or factor <= 0.0:
        raise ValidationError("dilation factor must be a positive finite real")
    center = hull.centroid()
    scaled = center + factor * (hull.vertices - center)
    return ConvexPolygon(scaled, _validate=False)
