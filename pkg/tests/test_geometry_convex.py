"""Convex hull construction against an independent gift-wrapping oracle.

The oracle below is written from scratch (Jarvis march with a
farthest-point tie break) and shares no code with the package's monotone
chain, so agreement on the same input is meaningful evidence.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wraphull.base import PointSet, Window
from wraphull.errors import DegenerateHull, EmptySample, ValidationError
from wraphull.geometry.convex import ConvexPolygon, convex_hull, dilate_hull

_TIE = 1e-12

N_ORACLE_INSTANCES = 500
MAX_POINTS = 200


def _turn(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def wrap_hull_oracle(coords):
    """Gift-wrapping convex hull, counter-clockwise, strictly convex.

    Ties along a supporting line are broken toward the farthest point, so
    collinear interior points never become vertices. Returns the vertex
    coordinates; for one or two distinct input points returns them sorted.
    """
    pts = np.unique(np.asarray(coords, dtype=float), axis=0)
    if len(pts) <= 2:
        return pts
    start = int(np.lexsort((pts[:, 1], pts[:, 0]))[0])
    hull = [start]
    current = start
    while True:
        candidate = (current + 1) % len(pts)
        for j in range(len(pts)):
            if j == current or j == candidate:
                continue
            t = _turn(pts[current], pts[candidate], pts[j])
            if t < -_TIE:
                candidate = j
            elif abs(t) <= _TIE:
                dc = np.sum((pts[candidate] - pts[current]) ** 2)
                dj = np.sum((pts[j] - pts[current]) ** 2)
                if dj > dc:
                    candidate = j
        if candidate == start:
            break
        hull.append(candidate)
        current = candidate
        if len(hull) > len(pts):  # pragma: no cover - guards a broken oracle
            raise AssertionError("gift wrapping failed to close")
    verts = pts[hull]
    if len(verts) >= 3 and abs(_turn(verts[0], verts[1], verts[2])) <= _TIE and len(verts) == 3:
        # fully collinear set reached the 3-vertex path; keep the extremes
        order = np.lexsort((verts[:, 1], verts[:, 0]))
        verts = verts[[order[0], order[-1]]]
    return verts


def canon(verts):
    """Roll a counter-clockwise vertex cycle to start at the lexicographic min."""
    verts = np.asarray(verts, dtype=float)
    if len(verts) <= 2:
        order = np.lexsort((verts[:, 1], verts[:, 0]))
        return verts[order]
    k = int(np.lexsort((verts[:, 1], verts[:, 0]))[0])
    return np.roll(verts, -k, axis=0)


def _random_instance(gen):
    kind = gen.random()
    if kind < 0.15:
        # integer lattice: exact arithmetic, lots of collinear triples
        n = int(gen.integers(3, 60))
        pts = np.unique(gen.integers(0, 10, size=(n, 2)).astype(float), axis=0)
    elif kind < 0.25:
        # clustered points, some nearly coincident
        n = int(gen.integers(3, 120))
        base = gen.random((max(n // 8, 1), 2))
        pts = base[gen.integers(0, len(base), n)] + gen.normal(0, 1e-3, (n, 2))
        pts = np.unique(pts, axis=0)
    else:
        n = int(gen.integers(1, MAX_POINTS + 1))
        pts = gen.random((n, 2))
    return pts


def test_matches_gift_wrapping_on_random_instances():
    gen = np.random.default_rng(813)
    checked = 0
    for _ in range(N_ORACLE_INSTANCES):
        pts = _random_instance(gen)
        if len(pts) == 0:
            continue
        hull = convex_hull(pts)
        expect = wrap_hull_oracle(pts)
        got = canon(hull.vertices)
        want = canon(expect)
        assert got.shape == want.shape, f"vertex count {got.shape} vs oracle {want.shape}"
        assert np.array_equal(got, want), "hull vertices disagree with gift wrapping"
        checked += 1
    assert checked == N_ORACLE_INSTANCES


def test_collinear_input_keeps_two_extremes():
    pts = np.column_stack([np.linspace(0.1, 0.9, 7), np.linspace(0.2, 0.6, 7)])
    hull = convex_hull(pts)
    assert len(hull.vertices) == 2
    assert hull.area() == 0.0
    want = canon(wrap_hull_oracle(pts))
    assert np.array_equal(canon(hull.vertices), want)


def test_single_and_pair_inputs():
    one = convex_hull(np.array([[0.3, 0.7]]))
    assert len(one.vertices) == 1 and one.area() == 0.0
    two = convex_hull(np.array([[0.3, 0.7], [0.6, 0.1]]))
    assert len(two.vertices) == 2 and two.area() == 0.0
    with pytest.raises(EmptySample):
        convex_hull(np.empty((0, 2)))


def test_accepts_pointset_and_rejects_1d():
    ps = PointSet(np.array([[0.2, 0.2], [0.8, 0.3], [0.5, 0.9]]))
    hull = convex_hull(ps)
    assert len(hull.vertices) == 3
    ps1 = PointSet(np.array([0.2, 0.8]), window=Window(dim=1))
    with pytest.raises(ValidationError):
        convex_hull(ps1)


@given(st.integers(min_value=3, max_value=80), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=60)
def test_contains_all_sample_points(n, seed):
    gen = np.random.default_rng(seed)
    pts = gen.random((n, 2))
    hull = convex_hull(pts)
    assert np.all(hull.contains(pts, eps=1e-9))


@given(st.integers(min_value=3, max_value=80), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=60)
def test_vertices_are_sample_points(n, seed):
    gen = np.random.default_rng(seed)
    pts = gen.random((n, 2))
    hull = convex_hull(pts)
    rows = {tuple(p) for p in pts}
    for v in hull.vertices:
        assert tuple(v) in rows


@given(st.integers(min_value=3, max_value=80), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=60)
def test_idempotent_on_own_vertices(n, seed):
    gen = np.random.default_rng(seed)
    pts = gen.random((n, 2))
    hull = convex_hull(pts)
    again = convex_hull(hull.vertices)
    assert np.array_equal(canon(again.vertices), canon(hull.vertices))


@given(st.integers(min_value=3, max_value=60), st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40)
def test_interior_points_do_not_change_hull(n, seed):
    gen = np.random.default_rng(seed)
    pts = gen.random((n, 2))
    hull = convex_hull(pts)
    if hull.area() < 1e-6:
        return
    c = hull.centroid()
    extra = c + 0.5 * (pts[: min(10, n)] - c)
    grown = convex_hull(np.vstack([pts, extra]))
    assert np.allclose(canon(grown.vertices), canon(hull.vertices))


def test_area_and_perimeter_unit_square():
    sq = ConvexPolygon(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
    assert sq.area() == 1.0
    assert sq.perimeter() == 4.0
    assert np.allclose(sq.centroid(), [0.5, 0.5])


def test_polygon_validation_rejects_nonconvex_loop():
    bad = np.array([[0.0, 0.0], [1.0, 0.0], [0.2, 0.2], [0.0, 1.0]])
    with pytest.raises(ValidationError):
        ConvexPolygon(bad)
    with pytest.raises(ValidationError):
        ConvexPolygon(np.empty((0, 2)))


def test_clockwise_loop_is_reoriented():
    cw = np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, 0.0]])
    poly = ConvexPolygon(cw)
    from wraphull.geometry.predicates import shoelace_area

    assert shoelace_area(poly.vertices) > 0


def test_dilate_scales_area_quadratically():
    gen = np.random.default_rng(7)
    for _ in range(25):
        pts = gen.random((30, 2))
        hull = convex_hull(pts)
        factor = float(gen.uniform(0.3, 2.5))
        grown = dilate_hull(hull, factor)
        assert grown.area() == pytest.approx(hull.area() * factor**2, rel=1e-12)
        assert np.allclose(grown.centroid(), hull.centroid(), atol=1e-9)


def test_dilate_factor_one_is_identity():
    hull = convex_hull(np.random.default_rng(3).random((20, 2)))
    same = dilate_hull(hull, 1.0)
    assert np.allclose(same.vertices, hull.vertices)


def test_dilate_rejects_bad_factor():
    hull = convex_hull(np.random.default_rng(4).random((10, 2)))
    for bad in (0.0, -1.0, float("nan"), float("inf")):
        with pytest.raises(ValidationError):
            dilate_hull(hull, bad)


def test_degenerate_centroid_raises():
    seg = ConvexPolygon(np.array([[0.0, 0.0], [1.0, 1.0]]))
    with pytest.raises(DegenerateHull):
        seg.centroid()


def test_boundary_distance_simple():
    sq = ConvexPolygon(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))
    assert sq.boundary_distance([0.5, 0.5]) == pytest.approx(0.5)
    assert sq.boundary_distance([2.0, 0.5]) == pytest.approx(1.0)
