"""Named benchmark regions used by the experiments and the CLI.

All of them live in the unit-square window:

* annulus: ring between radii 0.25 and 0.5 around the center, the
  standard non-convex target (area about 0.589);
* disk: ball of radius 0.4 around the center, convex, so hulls of its
  samples stay inside it and missing volume is exact;
* ring-with-core: the annulus plus a separate ball of radius 0.1 in the
  middle of its hole (area about 0.620);
* box: axis-aligned square [0.1, 0.9]^2, matching four axis normals;
* octagon: regular octagon with apothem 0.35, matching eight evenly
  spaced normals;
* square: the whole unit window, used by the pi experiment.
"""

import numpy as np

from ..errors import ValidationError
from ..geometry.halfspace import evenly_spaced_normals
from ..geometry.region import Annulus, Disk, PolygonRegion, UnionRegion

CENTER = (0.5, 0.5)


def annulus_region():
    return Annulus(CENTER, 0.5, 0.25)


def disk_region(radius=0.4):
    return Disk(CENTER, radius)


def ring_with_core_region():
    return UnionRegion([Annulus(CENTER, 0.5, 0.25), Disk(CENTER, 0.1)])


def box_region():
    region = PolygonRegion([[0.1, 0.1], [0.9, 0.1], [0.9, 0.9], [0.1, 0.9]])
    region.facet_normals = evenly_spaced_normals(4)
    return region


def regular_polygon_region(k, apothem=0.35):
    """Convex polygon whose facet normals are the k evenly spaced unit
    vectors; vertices lie between consecutive facet tangency points."""
    if k < 3:
        raise ValidationError("need at least 3 normals for a polygon region")
    normals = evenly_spaced_normals(k)
    center = np.asarray(CENTER)
    circum = apothem / np.cos(np.pi / k)
    # vertex directions bisect consecutive normal directions
    angles = 2.0 * np.pi * (np.arange(k) + 0.5) / k
    verts = center + circum * np.column_stack([np.cos(angles), np.sin(angles)])
    region = PolygonRegion(verts)
    region.facet_normals = normals
    return region


def square_region():
    return PolygonRegion([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])


_FACTORIES = {
    "annulus": annulus_region,
    "disk": disk_region,
    "ring-with-core": ring_with_core_region,
    "box": box_region,
    "octagon": lambda: regular_polygon_region(8),
    "square": square_region,
}


def benchmark_region(name):
    try:
        factory = _FACTORIES[name]
    except KeyError:
        known = ", ".join(sorted(_FACTORIES))
        raise ValidationError(f"unknown region {name!r}; known regions: {known}") from None
    return factory()


REGION_NAMES = tuple(sorted(_FACTORIES))
