"""Thin Delaunay wrapper exposing the edge and circumcircle data the
r-convex hull construction needs."""

import numpy as np
from scipy.spatial import Delaunay as _SciPyDelaunay
from scipy.spatial import QhullError

from ..errors import GeometryError
from .predicates import triangle_circumdata


class DelaunayTriangulation:
    """Triangulation of a planar site set.

    Attributes
    ----------
    sites : (n, 2) array
    triangles : (m, 3) int array of site indices
    circumcenters : (m, 2) array
    circumradii : (m,) array, inf for degenerate slivers
    edges : (E, 2) int array of unique undirected edges, each row sorted
    edge_triangles : (E, 2) int array of incident triangle ids, -1 padding
    """

    def __init__(self, sites, triangles):
        self.sites = np.asarray(sites, dtype=float)
        self.triangles = np.asarray(triangles, dtype=int).reshape(-1, 3)
        self.circumcenters, self.circumradii = triangle_circumdata(self.sites, self.triangles)
        self._build_edge_table()

    def _build_edge_table(self):
        tri = self.triangles
        m = len(tri)
        raw = np.concatenate([tri[:, [0, 1]], tri[:, [1, 2]], tri[:, [2, 0]]], axis=0)
        raw.sort(axis=1)
        owner = np.tile(np.arange(m), 3)
        self.edges, inverse = np.unique(raw, axis=0, return_inverse=True)
        et = np.full((len(self.edges), 2), -1, dtype=int)
        for k in range(len(inverse)):
            e = inverse[k]
            if et[e, 0] == -1:
                et[e, 0] = owner[k]
            else:
                et[e, 1] = owner[k]
        self.edge_triangles = et

    def triangle_areas(self):
        a = self.sites[self.triangles[:, 0]]
        b = self.sites[self.triangles[:, 1]]
        c = self.sites[self.triangles[:, 2]]
        return 0.5 * np.abs(
            (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1])
            - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
        )


def triangulate(coords):
    """Delaunay triangulation of the coordinate array, or None when the
    input has no 2D triangulation (fewer than 3 points, or all collinear).
    """
    coords = np.asarray(coords, dtype=float)
    if len(coords) < 3:
        return None
    centered = coords - coords.mean(axis=0)
    # rank test catches exactly-collinear input before qhull chokes on it
    sv = np.linalg.svd(centered, compute_uv=False)
    if sv[-1] <= 1e-14 * max(1.0, sv[0]):
        return None
    try:
        dt = _SciPyDelaunay(coords)
    except QhullError as exc:
        raise GeometryError(f"triangulation failed: {exc}") from exc
    return DelaunayTriangulation(coords, dt.simplices)
