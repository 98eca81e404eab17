"""Grid-based measurement of the volume a hull misses.

The missing volume is the area of the region minus the part the hull
covers. When the region is convex and the hull is a convex polygon built
from points inside it, the hull is a subset and the difference of exact
areas is used. Otherwise the region's bounding box is rasterized and
cell centers are classified against both sets; the error of that count
is of the order cell size times boundary length.
"""

import numpy as np

from ..errors import ValidationError
from ..geometry.convex import ConvexPolygon
from ..geometry.halfspace import HalfspaceHull
from ..geometry.region import Disk


def raster_missing_volume(region, hull, resolution=1024):
    """Area of region minus hull by counting grid cell centers."""
    resolution = int(resolution)
    if resolution < 2:
        raise ValidationError("raster resolution must be at least 2")
    box = region.bounding_box()
    lo, hi = box[:, 0], box[:, 1]
    if len(lo) != 2:
        raise ValidationError("rasterization works on planar regions")
    span = hi - lo
    step = span.max() / resolution
    nx = max(1, int(np.ceil(span[0] / step)))
    ny = max(1, int(np.ceil(span[1] / step)))
    xs = lo[0] + (np.arange(nx) + 0.5) * step
    ys = lo[1] + (np.arange(ny) + 0.5) * step
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    centers = np.column_stack([gx.ravel(), gy.ravel()])
    in_region = region.contains(centers)
    candidates = centers[in_region]
    if len(candidates) == 0:
        return 0.0
    in_hull = hull_membership(hull, candidates)
    missing_cells = int(np.count_nonzero(~in_hull))
    return missing_cells * step * step


def hull_membership(hull, coords):
    """Vectorized membership of many points in any hull type."""
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    if hasattr(hull, "contains_many"):
        return hull.contains_many(coords)
    if isinstance(hull, (ConvexPolygon, HalfspaceHull)):
        return hull.contains(coords)
    out = np.zeros(len(coords), dtype=bool)
    for i, p in enumerate(coords):
        out[i] = hull.contains(p)
    return out


def exact_missing_volume(region, hull):
    """Region area minus hull area, valid when the hull is contained in
    the region (convex region with a convex hull of its own sample)."""
    convex_region = isinstance(region, Disk) or getattr(region, "facet_normals", None) is not None
    convex_hull_type = isinstance(hull, (ConvexPolygon, HalfspaceHull))
    if not (convex_region and convex_hull_type):
        raise ValidationError("exact missing volume needs a convex region and hull")
    return region.exact_area() - hull.area()


def missing_volume(region, hull, resolution=1024):
    """Exact when containment is guaranteed, raster fallback otherwise."""
    try:
        return exact_missing_volume(region, hull)
    except ValidationError:
        return raster_missing_volume(region, hull, resolution)
