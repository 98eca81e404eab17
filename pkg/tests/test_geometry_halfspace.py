"""Fixed-normal hulls against an independent polygon-clipping oracle.

The construction under test enumerates candidate vertices from pairwise
constraint-line intersections. The oracle instead clips the window
polygon by each halfspace in turn (Sutherland-Hodgman), a completely
different route to the same region.
"""

import numpy as np
import pytest

from wraphull.base import PointSet, Window
from wraphull.errors import EmptySample, UnboundedHull, ValidationError
from wraphull.geometry.halfspace import (
    HalfspaceHull,
    evenly_spaced_normals,
    fixed_normal_hull,
)


def clip_oracle(window, normals, offsets):
    """Clip the window rectangle by each halfspace u.x <= h in turn."""
    poly = [np.asarray(c, dtype=float) for c in window.corners()]
    for u, h in zip(normals, offsets):
        if not poly:
            break
        out = []
        for i in range(len(poly)):
            cur = poly[i]
            nxt = poly[(i + 1) % len(poly)]
            c_val = float(u @ cur) - h
            n_val = float(u @ nxt) - h
            if c_val <= 0.0:
                out.append(cur)
            if (c_val <= 0.0) != (n_val <= 0.0):
                t = c_val / (c_val - n_val)
                out.append(cur + t * (nxt - cur))
        poly = out
    return np.array(poly) if poly else np.zeros((0, 2))


def oracle_area(poly):
    if len(poly) < 3:
        return 0.0
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))))


def _spanning_normals(gen):
    k = int(gen.integers(3, 13))
    if gen.random() < 0.5:
        return evenly_spaced_normals(k, phase=float(gen.uniform(0, 2 * np.pi)))
    while True:
        angles = gen.uniform(0, 2 * np.pi, k)
        angles.sort()
        gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * np.pi]]))
        if np.max(gaps) < np.pi - 1e-3:
            return np.column_stack([np.cos(angles), np.sin(angles)])


N_CLIP_INSTANCES = 100
CLIP_TOL = 1e-9


def test_matches_clipping_oracle_on_random_instances():
    gen = np.random.default_rng(4711)
    for trial in range(N_CLIP_INSTANCES):
        normals = _spanning_normals(gen)
        n = int(gen.integers(1, 151))
        if trial % 5 == 0:
            window = Window(bounds=[[-1.0, 2.0], [0.0, 3.0]])
            pts = PointSet(gen.uniform([-1, 0], [2, 3], (n, 2)), window=window)
        else:
            window = Window(dim=2)
            pts = PointSet(gen.random((n, 2)), window=window)
        hull = fixed_normal_hull(pts, normals)
        want = clip_oracle(window, normals, hull.offsets)
        assert hull.area() == pytest.approx(oracle_area(want), abs=CLIP_TOL)
        # two-sided vertex agreement
        if len(want):
            assert np.all(hull.polygon.contains(want, eps=CLIP_TOL))
        for v in hull.polygon.vertices:
            assert np.all(v @ normals.T <= hull.offsets + CLIP_TOL)
            assert window.contains(v, eps=CLIP_TOL)[0]


def test_offsets_are_max_projections():
    gen = np.random.default_rng(11)
    pts = gen.random((40, 2))
    normals = evenly_spaced_normals(6, phase=0.3)
    hull = fixed_normal_hull(pts, normals)
    assert np.array_equal(hull.offsets, np.max(pts @ normals.T, axis=0))


def test_axis_box_exact():
    pts = np.array([[0.2, 0.2], [0.8, 0.8], [0.5, 0.4]])
    hull = fixed_normal_hull(pts, evenly_spaced_normals(4))
    assert hull.area() == pytest.approx(0.36, abs=1e-12)
    assert np.all(hull.contains(pts))
    assert hull.bounded


def test_sample_always_contained():
    gen = np.random.default_rng(8)
    for _ in range(30):
        pts = gen.random((int(gen.integers(1, 60)), 2))
        hull = fixed_normal_hull(pts, _spanning_normals(gen))
        assert np.all(hull.contains(pts, eps=1e-9))


def test_unbounded_normals_raise_with_recoverable_hull():
    # all normals point into the right half-plane: no positive span
    angles = np.array([-1.0, -0.3, 0.4, 1.2])
    normals = np.column_stack([np.cos(angles), np.sin(angles)])
    pts = np.random.default_rng(3).random((25, 2))
    with pytest.raises(UnboundedHull) as exc_info:
        fixed_normal_hull(pts, normals)
    clipped = exc_info.value.hull
    assert isinstance(clipped, HalfspaceHull)
    assert not clipped.bounded
    assert np.all(clipped.contains(pts, eps=1e-9))
    # the attached polygon agrees with the clipping oracle as well
    want = clip_oracle(Window(dim=2), normals, clipped.offsets)
    assert clipped.area() == pytest.approx(oracle_area(want), abs=1e-9)


def test_active_constraint_flags_support_points():
    gen = np.random.default_rng(21)
    pts = gen.random((50, 2))
    normals = evenly_spaced_normals(5, phase=0.1)
    hull = fixed_normal_hull(pts, normals)
    active = hull.active_constraint(pts, eps=1e-12)
    # every facet's argmax point must be flagged
    arg = np.argmax(pts @ normals.T, axis=0)
    assert np.all(active[arg])
    # the deep interior centroid of the support points is not flagged
    center = pts[arg].mean(axis=0)
    if np.all(hull.offsets - center @ normals.T > 1e-6):
        assert not hull.active_constraint(center, eps=1e-12)[0]


def test_normal_validation():
    pts = np.array([[0.5, 0.5]])
    with pytest.raises(ValidationError):
        fixed_normal_hull(pts, np.array([[1.0, 1.0]]))  # not unit length
    with pytest.raises(ValidationError):
        fixed_normal_hull(pts, np.zeros((0, 2)))
    with pytest.raises(EmptySample):
        fixed_normal_hull(np.empty((0, 2)), evenly_spaced_normals(3))


def test_evenly_spaced_normals_exact_axes():
    u = evenly_spaced_normals(4)
    assert np.array_equal(u, np.array([[1.0, 0.0], [0.0, 1.0], [-1.0, 0.0], [0.0, -1.0]]))
    for k in (1, 2, 3, 7, 12):
        v = evenly_spaced_normals(k, phase=0.7)
        assert np.allclose(np.linalg.norm(v, axis=1), 1.0, atol=1e-15)
    with pytest.raises(ValidationError):
        evenly_spaced_normals(0)


def test_single_point_sample():
    hull = fixed_normal_hull(np.array([[0.4, 0.6]]), evenly_spaced_normals(3, phase=0.2))
    assert hull.area() == pytest.approx(0.0, abs=1e-18)
    assert hull.contains([0.4, 0.6])[0]
