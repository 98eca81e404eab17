"""r-convex hulls (alpha hulls) of planar samples.

The hull of a sample at radius r is the complement of the union of all
open r-balls that contain no sample point. Equivalently, a point z
belongs to the hull exactly when the r-disk around z is covered by the
union of r-disks around the sample points, which makes the hull the
morphological closing of the sample with a disk of radius r.

The carved set (the union of the empty balls) meets the r-neighborhood
of the sample in two kinds of primitive:

* the open ball of radius r at every exposed supporting center, that is,
  every point at distance exactly r from the two ends of a Delaunay edge
  shorter than 2r and at least r from every sample (only Delaunay pairs
  can have such centers);
* the open sector of radius 2r around every sample, over the angular
  stretches of its r-circle not covered by a neighbor's r-disk (the
  sweep of an exposed circle stretch by radius r).

The hull boundary is therefore made of arcs only: radius-r arcs of the
exposed balls and radius-2r arcs closing off the sectors, cut at circle
intersection points, at sample points, and at sector corners, traversed
clockwise around their centers so the hull stays on the left. Status
along a circle only changes at those cut points or strictly inside a
stretch that is already carved, so a midpoint test per elementary
stretch (within r of a sample, outside every exposed ball, outside
every sector) decides what survives. With dense samples this reduces to
the familiar picture of kept Delaunay triangles minus one circular
segment per boundary edge; with sparse samples it also keeps pockets
enclosed by webs of short edges, which that picture misses entirely.

Zero-area leftovers are detected combinatorially: a short edge with no
kept triangle whose two supporting balls are both empty survives as an
isolated segment, and a sample in no kept triangle and no such segment
survives as an isolated point.

Sample points are classified three ways. A point is interior when it is
strictly inside the kept material (every edge of its triangle fan is
shared by two kept triangles); everything else is boundary. Among the
boundary points, the isolated ones are those with no incident edge
shared by two kept triangles: detached points, endpoints of zero-area
segments, and whisker vertices where the kept material is only one
triangle thick. At such a point the hull carries no two-dimensional
collar, which is what the isolated count in the replication tables
measures.
"""

import warnings

import numpy as np
from scipy.spatial import cKDTree

from .. import config
from ..base import PointSet
from ..errors import BadRadius, EmptySample, ValidationError
from .delaunay import triangulate
from .predicates import circular_segment_area, shoelace_area

# a carve must reach deeper than this before it blocks a stretch, and
# stretches shorter than this angle are merged away
_DEPTH_TOL = 1e-12
_ANG_TOL = 1e-9
_TWO_PI = 2.0 * np.pi


class ArcEdge:
    """One boundary edge of an arc polygon.

    kind is "straight" or "arc". Arc edges carry the circle center and a
    bulge sign: +1 when the circular segment between chord and arc adds
    to the enclosed area, -1 when it is carved out of it. The arc radius
    is the distance from either endpoint to the center, so arcs of
    different radii can share one polygon.
    """

    __slots__ = ("a", "b", "kind", "center", "bulge")

    def __init__(self, a, b, kind="straight", center=None, bulge=0):
        self.a = np.asarray(a, dtype=float)
        self.b = np.asarray(b, dtype=float)
        self.kind = kind
        self.center = None if center is None else np.asarray(center, dtype=float)
        self.bulge = int(bulge)
        if kind == "arc" and self.center is None:
            raise ValidationError("arc edges need a circle center")

    def chord_length(self):
        return float(np.linalg.norm(self.b - self.a))

    def radius(self):
        if self.center is None:
            return 0.0
        return float(np.linalg.norm(self.a - self.center))


class ArcPolygon:
    """A region bounded by straight and circular-arc edges, possibly with
    holes, plus the zero-area leftovers of the construction (isolated
    points and isolated segments).

    loops: list of edge lists; each loop is traversed with the enclosed
    material on its left, so outer loops run counter-clockwise and holes
    clockwise. radius is the construction radius.

    Hulls built by r_convex_hull also carry their carve description (the
    exposed ball centers and the carved sectors), and membership then
    reduces to "within r of a sample, outside every exposed ball and
    every sector". Hand-built polygons without that data fall back to
    even-odd tests on the loops themselves.
    """

    kind = "rconvex"

    def __init__(self, loops, radius, isolated_points=None, isolated_segments=None,
                 sample_coords=None, classification=None, carve_centers=None,
                 carve_sectors=None):
        self.loops = loops
        self.radius = float(radius)
        self.isolated_points = (
            np.zeros((0, 2)) if isolated_points is None or len(isolated_points) == 0
            else np.asarray(isolated_points, dtype=float).reshape(-1, 2)
        )
        self.isolated_segments = [
            np.asarray(s, dtype=float).reshape(2, 2) for s in (isolated_segments or [])
        ]
        self.sample_coords = None if sample_coords is None else np.asarray(sample_coords, float)
        # classification: dict of index arrays over sample_coords
        self.classification = classification
        self._centers = (
            None if carve_centers is None
            else np.asarray(carve_centers, dtype=float).reshape(-1, 2)
        )
        # sector rows (x, y, alpha, width): carved angular interval
        # [alpha, alpha + width) of the 2r-sector around (x, y)
        self._sectors = (
            None if carve_sectors is None
            else np.asarray(carve_sectors, dtype=float).reshape(-1, 4)
        )
        self._sample_tree = None
        self._center_tree = None

    def _exact(self):
        return self.sample_coords is not None and self._centers is not None

    def area(self):
        """Total enclosed area: outer loops minus holes, arc corrections
        applied with their bulge signs."""
        total = 0.0
        for loop in self.loops:
            verts = np.array([e.a for e in loop])
            signed = shoelace_area(verts)
            for e in loop:
                if e.kind == "arc":
                    seg = circular_segment_area(e.chord_length(), e.radius())
                    # a carving arc (bulge -1) removes the chord/arc lens from
                    # the material side whether the loop is outer (shrinks the
                    # hull) or a hole (grows the hole), so the correction sign
                    # does not depend on the loop orientation
                    signed += e.bulge * seg
            total += signed
        return max(0.0, total)

    def contains(self, p, eps=None):
        """Membership test, boundary inclusive within eps."""
        eps = config.epsilon(eps)
        p = np.asarray(p, dtype=float)
        for q in self.isolated_points:
            if np.linalg.norm(p - q) <= eps:
                return True
        for seg in self.isolated_segments:
            if min(np.linalg.norm(p - seg[0]), np.linalg.norm(p - seg[1])) <= eps:
                return True
        if self._on_boundary(p, eps):
            return True
        if self._exact():
            return bool(self.contains_many(p[None, :], eps)[0])
        inside = self._in_chord_loops(p)
        for loop in self.loops:
            for e in loop:
                if e.kind != "arc":
                    continue
                r = e.radius()
                d = np.linalg.norm(p - e.center)
                chord_side = _cross(e.b - e.a, p - e.a)
                center_side = _cross(e.b - e.a, e.center - e.a)
                in_segment = d < r - eps and chord_side * center_side < 0
                if in_segment:
                    if e.bulge < 0:
                        return False
                    inside = True
        return bool(inside)

    def contains_many(self, coords, eps=None):
        """Vectorized membership for many points at once.

        Boundary handling is approximate at the eps scale (no exact
        on-arc test), which is what rasterized area work needs.
        """
        eps = config.epsilon(eps)
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        m = len(coords)
        if self._exact():
            r = self.radius
            if self._sample_tree is None:
                self._sample_tree = cKDTree(self.sample_coords)
            result = self._sample_tree.query(coords, k=1)[0] < r
            if result.any() and len(self._centers):
                if self._center_tree is None:
                    self._center_tree = cKDTree(self._centers)
                result &= self._center_tree.query(coords, k=1)[0] >= r - eps
            if result.any() and self._sectors is not None and len(self._sectors):
                live = np.nonzero(result)[0]
                tree = cKDTree(coords[live])
                for x, y, alpha, width in self._sectors:
                    idx = tree.query_ball_point([x, y], 2.0 * r - eps)
                    if not idx:
                        continue
                    idx = np.asarray(idx)
                    d = coords[live[idx]] - [x, y]
                    rho = np.hypot(d[:, 0], d[:, 1])
                    rel = (np.arctan2(d[:, 1], d[:, 0]) - alpha) % _TWO_PI
                    carved = (rho > eps) & (rel < width)
                    result[live[idx[carved]]] = False
        else:
            px, py = coords[:, 0], coords[:, 1]
            crossings = np.zeros(m, dtype=np.int64)
            for loop in self.loops:
                for e in loop:
                    a, b = e.a, e.b
                    hit = (a[1] > py) != (b[1] > py)
                    if not hit.any():
                        continue
                    t = (py[hit] - a[1]) / (b[1] - a[1])
                    x = a[0] + t * (b[0] - a[0])
                    crossings[hit] += x > px[hit]
            result = (crossings % 2) == 1
            carved = np.zeros(m, dtype=bool)
            for loop in self.loops:
                for e in loop:
                    if e.kind != "arc":
                        continue
                    d = np.linalg.norm(coords - e.center, axis=1)
                    ab = e.b - e.a
                    chord_side = ab[0] * (py - e.a[1]) - ab[1] * (px - e.a[0])
                    center_side = _cross(ab, e.center - e.a)
                    in_seg = (d < e.radius() - eps) & (chord_side * center_side < 0)
                    if e.bulge < 0:
                        carved |= in_seg
                    else:
                        result |= in_seg
            result &= ~carved
        for q in self.isolated_points:
            result |= np.linalg.norm(coords - q, axis=1) <= eps
        for seg in self.isolated_segments:
            near = np.minimum(
                np.linalg.norm(coords - seg[0], axis=1),
                np.linalg.norm(coords - seg[1], axis=1),
            )
            result |= near <= eps
        return result

    def _on_boundary(self, p, eps):
        for loop in self.loops:
            for e in loop:
                if e.kind == "arc":
                    r = e.radius()
                    d = np.linalg.norm(p - e.center)
                    if abs(d - r) <= eps:
                        # near the circle; require p near the minor-arc side of the chord
                        chord_side = _cross(e.b - e.a, p - e.a)
                        center_side = _cross(e.b - e.a, e.center - e.a)
                        if chord_side * center_side <= eps:
                            return True
                else:
                    if _segment_distance(p, e.a, e.b) <= eps:
                        return True
        return False

    def _in_chord_loops(self, p):
        crossings = 0
        for loop in self.loops:
            for e in loop:
                a, b = e.a, e.b
                if (a[1] > p[1]) != (b[1] > p[1]):
                    t = (p[1] - a[1]) / (b[1] - a[1])
                    x = a[0] + t * (b[0] - a[0])
                    if x > p[0]:
                        crossings += 1
        return crossings % 2 == 1

    def __repr__(self):
        return (
            f"ArcPolygon(r={self.radius}, loops={len(self.loops)}, "
            f"isolated={len(self.isolated_points)}, segments={len(self.isolated_segments)}, "
            f"area={self.area():.6g})"
        )


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _segment_distance(p, a, b):
    d = b - a
    denom = float(np.dot(d, d))
    if denom == 0.0:
        return float(np.linalg.norm(p - a))
    t = min(1.0, max(0.0, float(np.dot(p - a, d)) / denom))
    return float(np.linalg.norm(p - (a + t * d)))


def _circle_points(c1, r1, c2, r2):
    """Proper intersection points of two circles, None for misses,
    tangencies within tolerance, and near-coincident circles."""
    dx = c2[0] - c1[0]
    dy = c2[1] - c1[1]
    d2 = dx * dx + dy * dy
    dist = np.sqrt(d2)
    if dist <= abs(r1 - r2) + _DEPTH_TOL or dist >= r1 + r2 - _DEPTH_TOL:
        return None
    a = (d2 + r1 * r1 - r2 * r2) / (2.0 * dist)
    h = np.sqrt(max(r1 * r1 - a * a, 0.0))
    ux, uy = dx / dist, dy / dist
    fx, fy = c1[0] + a * ux, c1[1] + a * uy
    return (
        np.array([fx - h * uy, fy + h * ux]),
        np.array([fx + h * uy, fy - h * ux]),
    )


class _CarveSet:
    """The carve primitives of one sample at one radius: exposed
    supporting ball centers with their defining pair, and per-sample
    carved sectors as angular intervals."""

    __slots__ = ("coords", "r", "centers", "pair_i", "pair_j",
                 "sector_rows", "sector_samples", "intervals", "center_tree")

    def __init__(self, coords, r, centers, pair_i, pair_j,
                 sector_rows, sector_samples, intervals):
        self.coords = coords
        self.r = r
        self.centers = centers          # (K, 2) exposed ball centers
        self.pair_i = pair_i            # (K,) sample index
        self.pair_j = pair_j
        self.sector_rows = sector_rows  # (S, 4): x, y, alpha, width
        self.sector_samples = sector_samples  # (S,) sample index per row
        self.intervals = intervals      # sample -> [(alpha, width, z_hi, z_lo)]
        self.center_tree = cKDTree(centers) if len(centers) else None


def _merge_coverage(starts, widths):
    """Union of angular intervals on a circle.

    Intervals are (start, width) with width below pi. Returns the merged
    cover as (start, end) rows sorted by start in [0, 2pi) with end
    possibly past 2pi for components that wrap, or None when the union
    is the whole circle. Components never overlap on the circle.
    """
    if len(starts) == 0:
        return []
    starts = np.asarray(starts, dtype=float) % _TWO_PI
    ends = starts + np.asarray(widths, dtype=float)
    # merge on a doubled line so wrapping components come out whole, then
    # keep the runs that start in the first turn
    s2 = np.concatenate([starts, starts + _TWO_PI])
    e2 = np.concatenate([ends, ends + _TWO_PI])
    order = np.argsort(s2, kind="stable")
    s2, e2 = s2[order], e2[order]
    merged = []
    cur_s, cur_e = s2[0], e2[0]
    for s, e in zip(s2[1:], e2[1:]):
        if s <= cur_e:
            cur_e = max(cur_e, e)
        else:
            merged.append((cur_s, cur_e))
            cur_s, cur_e = s, e
    merged.append((cur_s, cur_e))
    out = []
    for s, e in merged:
        if e - s >= _TWO_PI:
            return None
        if s < _TWO_PI:
            out.append((s, e))
    # a final wrapping component can swallow earlier ones whole
    while len(out) > 1 and out[-1][1] - _TWO_PI >= out[0][0]:
        s_last, e_last = out.pop()
        s0, e0 = out.pop(0)
        e_last = max(e_last, e0 + _TWO_PI)
        if e_last - s_last >= _TWO_PI:
            return None
        out.append((s_last, e_last))
    return out


def _carve_geometry(coords, tree, short_edges, r, ball_eps):
    """Exposed supporting ball centers and carved sectors at radius r.

    short_edges: (E, 2) Delaunay edges with length below 2r. A center is
    exposed when no sample comes within r of it; only such centers carve.
    A sample's sector covers the directions of its r-circle left exposed
    by the r-disks of its 2r-neighbors, closed off at radius 2r.
    """
    n = len(coords)
    if len(short_edges):
        a = coords[short_edges[:, 0]]
        b = coords[short_edges[:, 1]]
        mid = 0.5 * (a + b)
        d = b - a
        lengths = np.hypot(d[:, 0], d[:, 1])
        h = np.sqrt(np.maximum(r * r - 0.25 * lengths * lengths, 0.0))
        off = (h / lengths)[:, None] * np.stack([-d[:, 1], d[:, 0]], axis=1)
        centers = np.concatenate([mid + off, mid - off])
        pair_i = np.concatenate([short_edges[:, 0], short_edges[:, 0]])
        pair_j = np.concatenate([short_edges[:, 1], short_edges[:, 1]])
        exposed = tree.query(centers, k=1)[0] >= r - ball_eps
        centers = centers[exposed]
        pair_i = pair_i[exposed]
        pair_j = pair_j[exposed]
        if len(centers) > 1:
            dup = cKDTree(centers).query_pairs(_DEPTH_TOL, output_type="ndarray")
            if len(dup):
                drop = np.zeros(len(centers), dtype=bool)
                drop[dup[:, 1]] = True
                centers, pair_i, pair_j = centers[~drop], pair_i[~drop], pair_j[~drop]
    else:
        centers = np.zeros((0, 2))
        pair_i = pair_j = np.zeros(0, dtype=int)

    # samples owning sectors: ends of exposed centers, plus samples with
    # no neighbor within 2r at all (fully exposed circle)
    candidates = set(int(x) for x in pair_i) | set(int(x) for x in pair_j)
    if n > 1:
        dnn = tree.query(coords, k=2)[0][:, 1]
        candidates |= set(np.nonzero(dnn > 2.0 * r)[0].tolist())
    else:
        candidates = {0}

    incident = {}
    for t in range(len(centers)):
        incident.setdefault(int(pair_i[t]), []).append(t)
        incident.setdefault(int(pair_j[t]), []).append(t)

    sector_rows = []
    sector_samples = []
    intervals = {}
    for k in sorted(candidates):
        nbr = [m for m in tree.query_ball_point(coords[k], 2.0 * r) if m != k]
        if nbr:
            dvec = coords[nbr] - coords[k]
            dist = np.hypot(dvec[:, 0], dvec[:, 1])
            good = dist > _DEPTH_TOL
            dvec, dist = dvec[good], dist[good]
            psi = np.arctan2(dvec[:, 1], dvec[:, 0])
            half = np.arccos(np.clip(dist / (2.0 * r), -1.0, 1.0))
            cover = _merge_coverage((psi - half) % _TWO_PI, 2.0 * half)
        else:
            cover = []
        if cover is None:
            continue
        if not cover:
            # the whole circle is exposed
            intervals[k] = [(0.0, _TWO_PI, None, None)]
            sector_rows.append((coords[k, 0], coords[k, 1], 0.0, _TWO_PI))
            sector_samples.append(k)
            continue
        # exposed gaps between consecutive covered stretches
        own = incident.get(k, [])
        own_ang = (
            np.arctan2(centers[own][:, 1] - coords[k, 1],
                       centers[own][:, 0] - coords[k, 0]) % _TWO_PI
            if own else np.zeros(0)
        )

        def corner(angle):
            # hull corner where the sector side meets its endpoint ball,
            # reusing the ball center so junction keys match float-exactly
            if len(own_ang):
                delta = np.abs((own_ang - angle + np.pi) % _TWO_PI - np.pi)
                b = int(np.argmin(delta))
                if delta[b] < 1e-6:
                    w = centers[own[b]]
                    return 2.0 * w - coords[k]
            return coords[k] + 2.0 * r * np.array([np.cos(angle), np.sin(angle)])

        gaps = []
        for idx in range(len(cover)):
            gap_s = cover[idx][1] % _TWO_PI
            gap_e = cover[(idx + 1) % len(cover)][0] % _TWO_PI
            width = (gap_e - gap_s) % _TWO_PI
            if width <= _ANG_TOL or width >= _TWO_PI - _ANG_TOL:
                continue
            gaps.append((gap_s, width, corner(gap_e), corner(gap_s)))
        if gaps:
            intervals[k] = gaps
            for alpha, width, _, _ in gaps:
                sector_rows.append((coords[k, 0], coords[k, 1], alpha, width))
                sector_samples.append(k)

    sector_rows = np.asarray(sector_rows, dtype=float).reshape(-1, 4)
    sector_samples = np.asarray(sector_samples, dtype=int)
    return _CarveSet(coords, r, centers, pair_i, pair_j,
                     sector_rows, sector_samples, intervals)


def _keep_checks(mids, carve, tree):
    """Keep flags for stretch midpoints: inside the r-neighborhood of the
    sample, outside every exposed ball, outside every sector.

    A midpoint on its own circle is never excluded by its own primitive:
    it sits at distance exactly r from its ball center or exactly 2r
    from its sector sample, outside both strict-interior tests.
    """
    r = carve.r
    keep = tree.query(mids, k=1)[0] < r - _DEPTH_TOL
    if carve.center_tree is not None and keep.any():
        keep &= carve.center_tree.query(mids, k=1)[0] >= r - _DEPTH_TOL
    if len(carve.sector_rows) and keep.any():
        live = np.nonzero(keep)[0]
        mtree = cKDTree(mids[live])
        for x, y, alpha, width in carve.sector_rows:
            idx = mtree.query_ball_point([x, y], 2.0 * r - _DEPTH_TOL)
            if not idx:
                continue
            idx = np.asarray(idx)
            d = mids[live[idx]] - [x, y]
            rho = np.hypot(d[:, 0], d[:, 1])
            rel = (np.arctan2(d[:, 1], d[:, 0]) - alpha) % _TWO_PI
            carved = (rho > _DEPTH_TOL) & (rel > _ANG_TOL) & (rel < width - _ANG_TOL)
            keep[live[idx[carved]]] = False
    return keep


def _cyclic_stretches(bps):
    """Elementary stretches of a full circle from breakpoint list
    [(s, z, prio)], cyclically; returns [(s0, s1, z0, z1)] with s1 > s0.

    Breakpoints within angular tolerance of each other collapse to the
    one with the lowest prio, so a crossing computed numerically at a
    sample or corner yields the canonical point and loop chaining can
    match junction coordinates float-exactly.
    """
    bps = sorted(bps, key=lambda t: t[0])
    groups = []
    for entry in bps:
        if groups and entry[0] - groups[-1][-1][0] <= _ANG_TOL:
            groups[-1].append(entry)
        else:
            groups.append([entry])
    wrapped = None
    if len(groups) > 1 and (groups[0][0][0] + _TWO_PI) - groups[-1][-1][0] <= _ANG_TOL:
        wrapped = groups.pop()
    dedup = []
    for g in groups:
        best = min(g, key=lambda t: t[2])
        dedup.append((best[0], best[1]))
    if wrapped is not None:
        best = min(wrapped + groups[0], key=lambda t: t[2])
        s = best[0] - _TWO_PI if best[0] > np.pi else best[0]
        dedup[0] = (s, best[1])
    out = []
    for m in range(len(dedup)):
        s0, z0 = dedup[m]
        s1, z1 = dedup[(m + 1) % len(dedup)]
        if m == len(dedup) - 1:
            s1 += _TWO_PI
        out.append((s0, s1, z0, z1))
    return out


def _emit(pieces, p, q, center, sweep, radius):
    """Append a clockwise piece, splitting anything wider than pi so the
    chord-plus-segment area formula stays valid downstream."""
    if sweep <= _ANG_TOL:
        return
    if sweep <= np.pi + _ANG_TOL:
        pieces.append((p, q, center, -sweep, radius))
        return
    parts = int(np.ceil(sweep / (0.99 * np.pi)))
    phi_p = np.arctan2(p[1] - center[1], p[0] - center[0])
    prev = p
    for t in range(1, parts):
        ang = phi_p - sweep * t / parts
        z = center + radius * np.array([np.cos(ang), np.sin(ang)])
        pieces.append((prev, z, center, -sweep / parts, radius))
        prev = z
    pieces.append((prev, q, center, -sweep / parts, radius))


def _carve_pieces(coords, tree, carve):
    """Surviving boundary arcs of the hull at the carve's radius.

    Candidate circles are the exposed balls (radius r) and the sector
    closures (radius 2r over the exposed intervals). They are cut at
    proper circle intersections, at the ball's own two samples, and at
    sector corners; stretch midpoints decide survival. Pieces run
    clockwise around their centers, hull material on the left.
    """
    r = carve.r
    pieces = []
    K = len(carve.centers)
    ball_bps = [[] for _ in range(K)]

    def to_s(center, ref_angle, z):
        ang = np.arctan2(z[1] - center[1], z[0] - center[0])
        return (ref_angle - ang) % _TWO_PI

    # breakpoints on exposed balls: own samples, sector corners, crossings
    ref = np.zeros(K)
    for t in range(K):
        w = carve.centers[t]
        xi = coords[carve.pair_i[t]]
        xj = coords[carve.pair_j[t]]
        ref[t] = np.arctan2(xi[1] - w[1], xi[0] - w[0])
        ball_bps[t].append((0.0, xi, 0))
        ball_bps[t].append((to_s(w, ref[t], xj), xj, 0))
        for x in (xi, xj):
            corner = 2.0 * w - x
            ball_bps[t].append((to_s(w, ref[t], corner), corner, 1))
    if K > 1:
        for t, u in carve.center_tree.query_pairs(2.0 * r, output_type="ndarray"):
            pts = _circle_points(carve.centers[t], r, carve.centers[u], r)
            if pts is None:
                continue
            for z in pts:
                for g in (int(t), int(u)):
                    ball_bps[g].append((to_s(carve.centers[g], ref[g], z), z, 2))

    # crossings between exposed balls and sector closures (radius 2r)
    sec_bps = {}
    if K and len(carve.sector_rows):
        sec_centers = carve.sector_rows[:, :2]
        stree = cKDTree(sec_centers)
        for t in range(K):
            for srow in stree.query_ball_point(carve.centers[t], 3.0 * r):
                c2 = sec_centers[srow]
                pts = _circle_points(carve.centers[t], r, c2, 2.0 * r)
                if pts is None:
                    continue
                for z in pts:
                    ball_bps[t].append((to_s(carve.centers[t], ref[t], z), z, 2))
                    sec_bps.setdefault(srow, []).append(z)
    if len(carve.sector_rows) > 1:
        sec_centers = carve.sector_rows[:, :2]
        stree = cKDTree(sec_centers)
        for t, u in stree.query_pairs(4.0 * r, output_type="ndarray"):
            if carve.sector_samples[t] == carve.sector_samples[u]:
                continue
            pts = _circle_points(sec_centers[t], 2.0 * r, sec_centers[u], 2.0 * r)
            if pts is None:
                continue
            for z in pts:
                sec_bps.setdefault(int(t), []).append(z)
                sec_bps.setdefault(int(u), []).append(z)

    # collect candidate stretches for every circle, then classify all
    # their midpoints in one batched pass
    jobs = []
    mid_blocks = []

    def stage(stretches, center, radius, ref_angle, cyclic):
        if not stretches:
            return
        smid = np.array([0.5 * (s0 + s1) for s0, s1, _, _ in stretches])
        ang = ref_angle - smid
        mids = center + radius * np.stack([np.cos(ang), np.sin(ang)], axis=1)
        jobs.append((stretches, center, radius, cyclic, len(stretches)))
        mid_blocks.append(mids)

    # exposed balls: cyclic stretch classification
    for t in range(K):
        stage(_cyclic_stretches(ball_bps[t]), carve.centers[t], r, ref[t], True)

    # sector closures: per exposed interval, clockwise from the high end
    for k, gaps in sorted(carve.intervals.items()):
        for alpha, width, z_hi, z_lo in gaps:
            rows = np.nonzero(
                (carve.sector_samples == k)
                & (np.abs(carve.sector_rows[:, 2] - alpha) < 1e-12)
            )[0]
            hi = alpha + width
            c = coords[k]
            if z_hi is None:
                # full circle: treat cyclically with artificial anchors
                bps = [((-a) % _TWO_PI,
                        c + 2.0 * r * np.array([np.cos(a), np.sin(a)]), 1)
                       for a in (0.0, 2.0, 4.0)]
                for row in rows:
                    for z in sec_bps.get(int(row), []):
                        ang = np.arctan2(z[1] - c[1], z[0] - c[0])
                        bps.append(((-ang) % _TWO_PI, z, 2))
                stage(_cyclic_stretches(bps), c, 2.0 * r, 0.0, True)
                continue
            # linear: s measured clockwise from the high end of the gap
            inner = []
            for row in rows:
                for z in sec_bps.get(int(row), []):
                    ang = np.arctan2(z[1] - c[1], z[0] - c[0])
                    s = (hi - ang) % _TWO_PI
                    if _ANG_TOL < s < width - _ANG_TOL:
                        inner.append((s, z))
            inner.sort(key=lambda t2: t2[0])
            svals = [0.0]
            zpts = [z_hi]
            for s, z in inner:
                if s - svals[-1] > _ANG_TOL:
                    svals.append(s)
                    zpts.append(z)
            svals.append(width)
            zpts.append(z_lo)
            stretches = [
                (svals[m], svals[m + 1], zpts[m], zpts[m + 1])
                for m in range(len(svals) - 1)
            ]
            stage(stretches, c, 2.0 * r, hi, False)

    if not jobs:
        return pieces
    keep_all = _keep_checks(np.concatenate(mid_blocks), carve, tree)
    pos = 0
    for stretches, center, radius, cyclic, count in jobs:
        keep = keep_all[pos:pos + count]
        pos += count
        _emit_runs(pieces, stretches, keep, center, radius, cyclic=cyclic)
    return pieces


def _emit_runs(pieces, stretches, keep, center, radius, cyclic):
    """Merge consecutive kept stretches and emit them as pieces."""
    m = len(stretches)
    if m == 0:
        return
    if keep.all() and cyclic:
        total = stretches[-1][1] - stretches[0][0]
        if total >= _TWO_PI - _ANG_TOL:
            # the whole circle survives as one closed loop
            z0 = stretches[0][2]
            _emit(pieces, z0, z0, center, _TWO_PI, radius)
            return
    order = range(m)
    if cyclic and keep.any() and not keep.all():
        # rotate so a blocked stretch comes first, then merge linearly
        first_blocked = int(np.argmin(keep))
        order = [(first_blocked + i) % m for i in range(m)]
    run = []
    for i in order:
        if keep[i]:
            run.append(i)
            continue
        _flush_run(pieces, stretches, run, center, radius)
        run = []
    _flush_run(pieces, stretches, run, center, radius)


def _flush_run(pieces, stretches, run, center, radius):
    if not run:
        return
    sweep = sum(stretches[i][1] - stretches[i][0] for i in run)
    p = stretches[run[0]][2]
    q = stretches[run[-1]][3]
    _emit(pieces, p, q, center, sweep, radius)


def _pieces_area(pieces):
    """Green's theorem over directed arc pieces.

    A piece from p to q around center c with signed sweep and radius R
    contributes cross(c, q - p) / 2 + R^2 * sweep / 2; over a closed
    boundary the contributions sum to the enclosed area, holes negative.
    """
    total = 0.0
    for p, q, c, sweep, radius in pieces:
        total += 0.5 * (c[0] * (q[1] - p[1]) - c[1] * (q[0] - p[0]))
        total += 0.5 * radius * radius * sweep
    return total


def _cw_tangent(point, center):
    """Direction of clockwise travel around center at a circle point."""
    radial = point - center
    t = np.array([radial[1], -radial[0]])
    norm = float(np.hypot(t[0], t[1]))
    return t / norm if norm > 0.0 else np.array([1.0, 0.0])


def _assemble_arc_loops(pieces):
    """Chain directed arc pieces into closed loops.

    Piece endpoints at circle intersections and corners are shared
    float-exact between the circles that made them, so chaining matches
    raw coordinates. At a vertex with several outgoing pieces (a pinch
    at a sample point) the continuation is the piece turning most
    sharply back on the material side: the smallest clockwise angle from
    the reversed incoming tangent.
    """
    def key(pt):
        return (float(pt[0]), float(pt[1]))

    out_map = {}
    for idx, piece in enumerate(pieces):
        out_map.setdefault(key(piece[0]), []).append(idx)

    unused = set(range(len(pieces)))
    loops = []
    while unused:
        first = min(unused)
        unused.discard(first)
        chain = [first]
        while True:
            p, q, c, sweep, radius = pieces[chain[-1]]
            if len(chain) == 1 and key(q) == key(p) and abs(sweep) >= _TWO_PI - _ANG_TOL:
                break  # a full circle closes on itself
            cands = [i for i in out_map.get(key(q), []) if i in unused or i == first]
            if not cands:
                warnings.warn("dropping an unclosed hull boundary chain")
                chain = None
                break
            if len(cands) == 1:
                nxt = cands[0]
            else:
                tin = _cw_tangent(q, c)
                back = np.arctan2(-tin[1], -tin[0])
                nxt, best = None, None
                for i in cands:
                    tout = _cw_tangent(pieces[i][0], pieces[i][2])
                    cw = (back - np.arctan2(tout[1], tout[0])) % _TWO_PI
                    if cw == 0.0:
                        cw = _TWO_PI
                    if best is None or cw < best:
                        nxt, best = i, cw
            if nxt == first:
                break
            unused.discard(nxt)
            chain.append(nxt)
        if chain:
            loops.append(
                [ArcEdge(pieces[i][0], pieces[i][1], kind="arc",
                         center=pieces[i][2], bulge=-1) for i in chain]
            )
    return loops


def _as_coords(points):
    if isinstance(points, PointSet):
        if points.dim != 2:
            raise ValidationError("r_convex_hull needs 2-dimensional points")
        return points.coords
    coords = np.asarray(points, dtype=float)
    if coords.ndim != 2 or coords.shape[1] != 2:
        raise ValidationError("r_convex_hull needs an (n, 2) coordinate array")
    return coords


def _check_radius(r):
    r = float(r)
    if not np.isfinite(r) or r <= 0.0:
        raise BadRadius(f"radius must be a positive finite real, got {r}")
    return r


class _ScanData:
    """Radius-independent precomputation shared across radii."""

    def __init__(self, coords):
        self.coords = coords
        self.tri = triangulate(coords)
        self._tree = None
        if self.tri is not None:
            t = self.tri
            vecs = coords[t.edges[:, 1]] - coords[t.edges[:, 0]]
            self.edge_lengths = np.linalg.norm(vecs, axis=1)

    @property
    def tree(self):
        if self._tree is None:
            self._tree = cKDTree(self.coords)
        return self._tree

    def keep_mask(self, r):
        return self.tri.circumradii <= r

    def kept_edge_counts(self, keep):
        et = self.tri.edge_triangles
        k0 = (et[:, 0] >= 0) & keep[np.clip(et[:, 0], 0, None)]
        k1 = (et[:, 1] >= 0) & keep[np.clip(et[:, 1], 0, None)]
        return k0.astype(int) + k1.astype(int)

    def carve(self, r, ball_eps):
        short = self.tri.edges[self.edge_lengths < 2.0 * r]
        return _carve_geometry(self.coords, self.tree, short, r, ball_eps)

    def area(self, r, ball_eps):
        carve = self.carve(r, ball_eps)
        pieces = _carve_pieces(self.coords, self.tree, carve)
        return max(0.0, _pieces_area(pieces)), carve, pieces

    def counts_and_area(self, r):
        """(area, n_boundary, n_interior, n_isolated) at radius r."""
        n = len(self.coords)
        if self.tri is None:
            return 0.0, n, 0, n
        ball_eps = config.epsilon(None) * max(1.0, r)
        area = self.area(r, ball_eps)[0]
        keep = self.keep_mask(r)
        if not keep.any():
            return area, n, 0, n
        kt = self.kept_edge_counts(keep)
        boundary_edges = kt == 1
        in_kept = np.zeros(n, dtype=bool)
        in_kept[self.tri.triangles[keep].ravel()] = True
        on_loop = np.zeros(n, dtype=bool)
        on_loop[self.tri.edges[boundary_edges].ravel()] = True
        # isolated = no incident edge shared by two kept triangles, i.e.
        # the kept material is nowhere two-dimensional around the point
        has_interior_edge = np.zeros(n, dtype=bool)
        interior_edges = kt == 2
        if interior_edges.any():
            has_interior_edge[self.tri.edges[interior_edges].ravel()] = True
        interior = in_kept & ~on_loop
        n_isolated = int(np.count_nonzero(~has_interior_edge & ~interior))
        n_interior = int(np.count_nonzero(interior))
        n_boundary = n - n_interior
        return area, n_boundary, n_interior, n_isolated


def _supporting_centers(a, b, r):
    """Centers of the two radius-r circles through a and b.

    Collapses to the midpoint twice when |ab| equals 2r.
    """
    mid = (a + b) / 2.0
    d = b - a
    length = np.linalg.norm(d)
    h = np.sqrt(max(0.0, r * r - 0.25 * length * length))
    normal = np.array([-d[1], d[0]]) / length
    return mid + h * normal, mid - h * normal


def _ball_empty(tree, center, r, eps):
    dist = tree.query(center, k=1)[0]
    return dist >= r - eps


def _collinear_hull(coords, r, eps):
    """Degenerate path: every point is on one line, so the hull is just
    the points themselves plus any consecutive pairs closer than 2r."""
    n = len(coords)
    if n == 1:
        return ArcPolygon([], r, isolated_points=coords, sample_coords=coords,
                          classification=_zero_area_classification(n, []))
    direction = coords[-1] - coords[0]
    span = np.linalg.norm(direction)
    if span == 0.0:
        order = np.arange(n)
    else:
        order = np.argsort(coords @ (direction / span))
    segments = []
    seg_members = set()
    for i, j in zip(order[:-1], order[1:]):
        if np.linalg.norm(coords[j] - coords[i]) <= 2.0 * r:
            segments.append((int(i), int(j)))
            seg_members.update((int(i), int(j)))
    singles = [i for i in range(n) if i not in seg_members]
    return ArcPolygon(
        [],
        r,
        isolated_points=coords[singles] if singles else None,
        isolated_segments=[coords[[i, j]] for i, j in segments],
        sample_coords=coords,
        classification=_zero_area_classification(n, singles),
    )


def _zero_area_classification(n, singles):
    all_idx = np.arange(n)
    return {
        "boundary": all_idx,
        "interior": np.zeros(0, dtype=int),
        "isolated": all_idx,
        "singletons": np.asarray(sorted(singles), dtype=int),
    }


def r_convex_hull(points, r, eps=None):
    """Build the r-convex hull of a planar sample as an ArcPolygon."""
    coords = _as_coords(points)
    r = _check_radius(r)
    eps = config.epsilon(eps)
    if len(coords) == 0:
        raise EmptySample("r_convex_hull needs at least one point")

    scan = _ScanData(coords)
    if scan.tri is None:
        return _collinear_hull(coords, r, eps)

    tri = scan.tri
    n = len(coords)
    keep = scan.keep_mask(r)
    kt = scan.kept_edge_counts(keep)
    ball_eps = eps * max(1.0, r)

    carve = scan.carve(r, ball_eps)
    pieces = _carve_pieces(coords, scan.tree, carve)
    loops = _assemble_arc_loops(pieces)

    in_kept = np.zeros(n, dtype=bool)
    if keep.any():
        in_kept[tri.triangles[keep].ravel()] = True
    on_loop = np.zeros(n, dtype=bool)
    boundary_edge_ids = np.nonzero(kt == 1)[0]
    if len(boundary_edge_ids):
        on_loop[tri.edges[boundary_edge_ids].ravel()] = True

    # zero-area segments: short edges with no kept triangle and both
    # supporting balls empty of samples
    segments = []
    seg_members = set()
    candidates = np.nonzero((kt == 0) & (scan.edge_lengths <= 2.0 * r))[0]
    for e in candidates:
        i, j = (int(x) for x in tri.edges[e])
        c1, c2 = _supporting_centers(coords[i], coords[j], r)
        if _ball_empty(scan.tree, c1, r, ball_eps) and _ball_empty(scan.tree, c2, r, ball_eps):
            segments.append((i, j))
            seg_members.update((i, j))

    singles = [i for i in range(n) if not in_kept[i] and i not in seg_members]
    has_interior_edge = np.zeros(n, dtype=bool)
    interior_edge_ids = np.nonzero(kt == 2)[0]
    if len(interior_edge_ids):
        has_interior_edge[tri.edges[interior_edge_ids].ravel()] = True
    interior = in_kept & ~on_loop
    classification = {
        "boundary": np.nonzero(~interior)[0],
        "interior": np.nonzero(interior)[0],
        "isolated": np.nonzero(~has_interior_edge & ~interior)[0],
        "singletons": np.asarray(singles, dtype=int),
    }
    return ArcPolygon(
        loops,
        r,
        isolated_points=coords[singles] if singles else None,
        isolated_segments=[coords[[i, j]] for i, j in segments],
        sample_coords=coords,
        classification=classification,
        carve_centers=carve.centers,
        carve_sectors=carve.sector_rows,
    )


def rconvex_profile(points, radii):
    """Area and point-class counts of the r-convex hull across many radii.

    Shares one triangulation and one neighbor tree across the whole
    radius grid, so scanning a grid costs far less than independent
    hull builds. Returns a list of dicts with keys r, area, n_boundary,
    n_interior, n_isolated.
    """
    coords = _as_coords(points)
    if len(coords) == 0:
        raise EmptySample("rconvex_profile needs at least one point")
    scan = _ScanData(coords)
    out = []
    for r in radii:
        r = _check_radius(r)
        if scan.tri is None:
            n = len(coords)
            out.append({"r": r, "area": 0.0, "n_boundary": n,
                        "n_interior": 0, "n_isolated": n})
            continue
        area, nb, ni, niso = scan.counts_and_area(r)
        out.append(
            {"r": r, "area": area, "n_boundary": nb, "n_interior": ni, "n_isolated": niso}
        )
    return out
