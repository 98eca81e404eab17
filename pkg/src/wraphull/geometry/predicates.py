"""Low-level planar predicates and formulas used by the hull builders."""

import numpy as np


def cross2(o, a, b):
    """Signed area times two of the triangle (o, a, b).

    Positive when a -> b turns counter-clockwise around o.
    """
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def shoelace_area(vertices):
    """Signed polygon area; positive for counter-clockwise vertex order."""
    v = np.asarray(vertices, dtype=float)
    if len(v) < 3:
        return 0.0
    x = v[:, 0]
    y = v[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))


def polygon_centroid(vertices):
    """Area centroid of a simple polygon with nonzero area."""
    v = np.asarray(vertices, dtype=float)
    x = v[:, 0]
    y = v[:, 1]
    xn = np.roll(x, -1)
    yn = np.roll(y, -1)
    w = x * yn - xn * y
    a = 0.5 * np.sum(w)
    cx = np.sum((x + xn) * w) / (6.0 * a)
    cy = np.sum((y + yn) * w) / (6.0 * a)
    return np.array([cx, cy])


def point_segment_distance(p, a, b):
    """Euclidean distance from point p to the closed segment [a, b]."""
    p = np.asarray(p, dtype=float)
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    d = b - a
    denom = float(np.dot(d, d))
    if denom == 0.0:
        return float(np.linalg.norm(p - a))
    t = float(np.dot(p - a, d)) / denom
    t = min(1.0, max(0.0, t))
    return float(np.linalg.norm(p - (a + t * d)))


def distances_to_polygon_boundary(coords, vertices):
    """Distance from each point to the nearest polygon edge.

    Works edge by edge over the closed vertex loop, so the cost is the
    number of points times the number of vertices.
    """
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    v = np.asarray(vertices, dtype=float)
    if len(v) == 0:
        return np.full(len(coords), np.inf)
    if len(v) == 1:
        return np.linalg.norm(coords - v[0], axis=1)
    best = np.full(len(coords), np.inf)
    for i in range(len(v)):
        a = v[i]
        b = v[(i + 1) % len(v)]
        d = b - a
        denom = float(np.dot(d, d))
        if denom == 0.0:
            dist = np.linalg.norm(coords - a, axis=1)
        else:
            t = np.clip((coords - a) @ d / denom, 0.0, 1.0)
            dist = np.linalg.norm(coords - (a + t[:, None] * d), axis=1)
        np.minimum(best, dist, out=best)
    return best


def points_in_convex_polygon(coords, vertices, eps):
    """Vectorized membership test against a counter-clockwise convex polygon.

    Points within eps outside an edge still count as inside, so boundary
    points classify stably.
    """
    coords = np.atleast_2d(np.asarray(coords, dtype=float))
    v = np.asarray(vertices, dtype=float)
    if len(v) == 0:
        return np.zeros(len(coords), dtype=bool)
    if len(v) == 1:
        return np.linalg.norm(coords - v[0], axis=1) <= eps
    if len(v) == 2:
        a, b = v
        d = b - a
        ln = np.linalg.norm(d)
        t = np.clip((coords - a) @ d / (ln * ln), 0.0, 1.0)
        proj = a + t[:, None] * d
        return np.linalg.norm(coords - proj, axis=1) <= eps
    inside = np.ones(len(coords), dtype=bool)
    for i in range(len(v)):
        a = v[i]
        b = v[(i + 1) % len(v)]
        side = (b[0] - a[0]) * (coords[:, 1] - a[1]) - (b[1] - a[1]) * (coords[:, 0] - a[0])
        inside &= side >= -eps * np.hypot(b[0] - a[0], b[1] - a[1])
    return inside


def triangle_circumdata(points, triangles):
    """Circumcenters and circumradii for index triples into a site array.

    Degenerate (collinear) triples get an infinite radius, which makes
    them fail any radius-bounded filter downstream.
    """
    pts = np.asarray(points, dtype=float)
    tri = np.asarray(triangles, dtype=int)
    a = pts[tri[:, 0]]
    b = pts[tri[:, 1]]
    c = pts[tri[:, 2]]
    d = 2.0 * ((a[:, 0] - c[:, 0]) * (b[:, 1] - c[:, 1]) - (b[:, 0] - c[:, 0]) * (a[:, 1] - c[:, 1]))
    with np.errstate(divide="ignore", invalid="ignore"):
        aa = np.sum((a - c) ** 2, axis=1)
        bb = np.sum((b - c) ** 2, axis=1)
        ux = c[:, 0] + (aa * (b[:, 1] - c[:, 1]) - bb * (a[:, 1] - c[:, 1])) / d
        uy = c[:, 1] + (bb * (a[:, 0] - c[:, 0]) - aa * (b[:, 0] - c[:, 0])) / d
    centers = np.column_stack([ux, uy])
    radii = np.linalg.norm(centers - a, axis=1)
    bad = ~np.isfinite(radii)
    radii[bad] = np.inf
    return centers, radii


def circular_segment_area(chord_length, radius):
    """Area between a chord and its minor arc on a circle of the given radius."""
    if radius <= 0.0:
        return 0.0
    half = min(1.0, max(-1.0, chord_length / (2.0 * radius)))
    theta = 2.0 * np.arcsin(half)
    return 0.5 * radius * radius * (theta - np.sin(theta))
