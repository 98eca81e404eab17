"""Planar geometric kernel: hull constructions, regions, areas."""

from .compact import CompactHull, compact_hull
from .convex import ConvexPolygon, convex_hull, dilate_hull
from .delaunay import DelaunayTriangulation, triangulate
from .halfspace import HalfspaceHull, evenly_spaced_normals, fixed_normal_hull
from .interval import IntervalHull, interval_hull
from .rconvex import ArcEdge, ArcPolygon, r_convex_hull, rconvex_profile
from .region import (
    Annulus,
    DifferenceRegion,
    Disk,
    IntervalRegion,
    PolygonRegion,
    Region,
    UnionRegion,
)
from .serialize import dump_hull, load_hull

__all__ = [
    "Annulus",
    "ArcEdge",
    "ArcPolygon",
    "CompactHull",
    "ConvexPolygon",
    "DelaunayTriangulation",
    "DifferenceRegion",
    "Disk",
    "HalfspaceHull",
    "IntervalHull",
    "IntervalRegion",
    "PolygonRegion",
    "Region",
    "UnionRegion",
    "compact_hull",
    "convex_hull",
    "dilate_hull",
    "dump_hull",
    "evenly_spaced_normals",
    "fixed_normal_hull",
    "interval_hull",
    "load_hull",
    "r_convex_hull",
    "rconvex_profile",
    "triangulate",
]
