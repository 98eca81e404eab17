"""Hull text format round trips.

The format prints 17 significant digits, so float64 geometry survives a
dump/load cycle exactly; the checks below rely on that.
"""

import numpy as np
import pytest

from wraphull.base import PointSet, Window
from wraphull.errors import UnboundedHull, ValidationError
from wraphull.geometry.compact import compact_hull
from wraphull.geometry.convex import convex_hull
from wraphull.geometry.halfspace import evenly_spaced_normals, fixed_normal_hull
from wraphull.geometry.interval import interval_hull
from wraphull.geometry.rconvex import r_convex_hull
from wraphull.geometry.serialize import dump_hull, load_hull


def test_convex_round_trip():
    pts = np.random.default_rng(1).random((40, 2))
    hull = convex_hull(pts)
    out = load_hull(dump_hull(hull))
    assert out["type"] == "convex"
    assert np.array_equal(out["vertices"], hull.vertices)
    assert out["area"] == hull.area()


def test_interval_round_trip():
    hull = interval_hull(np.array([0.3, 0.9, 0.4]))
    out = load_hull(dump_hull(hull))
    assert out["type"] == "interval"
    assert (out["low"], out["high"]) == (0.3, 0.9)
    assert out["area"] == hull.area()


def test_compact_round_trip():
    pts = np.random.default_rng(2).random((7, 2))
    out = load_hull(dump_hull(compact_hull(pts)))
    assert out["type"] == "compact"
    assert np.array_equal(out["vertices"], pts)
    assert out["area"] == 0.0


def test_fixed_normal_round_trip():
    pts = np.random.default_rng(3).random((30, 2))
    hull = fixed_normal_hull(pts, evenly_spaced_normals(5, phase=0.4))
    out = load_hull(dump_hull(hull))
    assert out["type"] == "fixed-normal"
    assert out["param"] == 5
    assert np.array_equal(out["normals"], hull.normals)
    assert np.array_equal(out["offsets"], hull.offsets)
    assert np.array_equal(out["vertices"], hull.polygon.vertices)


def test_rconvex_round_trip_with_features():
    gen = np.random.default_rng(4)
    # blob plus a far pair and a lone point: loops, a segment, and a point
    blob = 0.3 + 0.25 * gen.random((40, 2))
    pair = np.array([[0.05, 0.9], [0.1, 0.93]])
    lone = np.array([[0.95, 0.05]])
    pts = np.vstack([blob, pair, lone])
    r = 0.08
    hull = r_convex_hull(pts, r)
    assert len(hull.isolated_segments) >= 1
    assert len(hull.isolated_points) >= 1

    out = load_hull(dump_hull(hull))
    assert out["type"] == "rconvex"
    assert out["param"] == r
    assert out["area"] == hull.area()
    n_edges = sum(len(loop) for loop in hull.loops)
    assert len(out["edges"]) == n_edges
    assert len(out["isolated_points"]) == len(hull.isolated_points)
    assert len(out["isolated_segments"]) == len(hull.isolated_segments)

    # the loop ids partition the edges the same way
    loops_seen = {}
    for e in out["edges"]:
        loops_seen.setdefault(e["loop"], 0)
        loops_seen[e["loop"]] += 1
    assert sorted(loops_seen.values()) == sorted(len(loop) for loop in hull.loops)

    # arc radius is recoverable from endpoint and center, and matches
    # either the carving radius r or the sector rim radius 2r
    for e in out["edges"]:
        if e["kind"] == "arc":
            rad = float(np.hypot(e["a"][0] - e["center"][0], e["a"][1] - e["center"][1]))
            assert min(abs(rad - r), abs(rad - 2 * r)) < 1e-9


def test_rconvex_area_recomputable_from_edges():
    # reconstruct the area from the parsed edge soup alone: shoelace over
    # chords plus signed circular segments
    gen = np.random.default_rng(5)
    pts = gen.random((70, 2))
    hull = r_convex_hull(pts, 0.14)
    out = load_hull(dump_hull(hull))

    def segment_area(chord, radius):
        half = min(1.0, chord / (2.0 * radius))
        theta = 2.0 * np.arcsin(half)
        return radius * radius * (theta - np.sin(theta)) / 2.0

    total = 0.0
    by_loop = {}
    for e in out["edges"]:
        by_loop.setdefault(e["loop"], []).append(e)
    for edges in by_loop.values():
        verts = np.array([e["a"] for e in edges])
        x, y = verts[:, 0], verts[:, 1]
        signed = 0.5 * (np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
        for e in edges:
            if e["kind"] == "arc":
                chord = float(np.hypot(e["b"][0] - e["a"][0], e["b"][1] - e["a"][1]))
                rad = float(np.hypot(e["a"][0] - e["center"][0], e["a"][1] - e["center"][1]))
                signed += e["bulge"] * segment_area(chord, rad)
        total += signed
    assert total == pytest.approx(out["area"], abs=1e-9)


def test_dump_rejects_unknown_and_load_rejects_garbage():
    with pytest.raises(ValidationError):
        dump_hull(object())
    with pytest.raises(ValidationError):
        load_hull("")
    with pytest.raises(ValidationError):
        load_hull("convex\n0.1,0.2\n")
    with pytest.raises(ValidationError):
        load_hull("martian,0,1\n")
    with pytest.raises(ValidationError):
        load_hull("rconvex,0.1,0\n1,2,3\n")


def test_unbounded_fixed_normal_hull_still_dumps():
    angles = np.array([0.2, 0.9, 1.4])
    normals = np.column_stack([np.cos(angles), np.sin(angles)])
    pts = np.random.default_rng(6).random((10, 2))
    try:
        fixed_normal_hull(pts, normals)
        raise AssertionError("expected UnboundedHull")
    except UnboundedHull as exc:
        text = dump_hull(exc.hull)
    out = load_hull(text)
    assert out["type"] == "fixed-normal" and out["param"] == 3
