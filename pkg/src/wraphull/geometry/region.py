"""Ground-truth regions with exact areas and membership tests.

These are the sets samples get drawn from. Each region knows its window,
an exact area, a vectorized membership test and a bounding box for
rejection sampling. Union children are assumed pairwise disjoint and a
difference assumes the subtracted set lies inside the first one; both
assumptions are documented contracts rather than verified properties,
and the exact areas are computed under them.
"""

import numpy as np

from ..base import Window
from ..errors import ValidationError
from .predicates import shoelace_area


class Region:
    def __init__(self, window):
        self.window = window

    def exact_area(self):
        raise NotImplementedError

    def contains(self, coords):
        raise NotImplementedError

    def bounding_box(self):
        """(dim, 2) array of [low, high] per axis, clipped to the window."""
        raise NotImplementedError

    def _clip_box(self, box):
        b = np.asarray(box, dtype=float)
        w = self.window.bounds
        lo = np.maximum(b[:, 0], w[:, 0])
        hi = np.minimum(b[:, 1], w[:, 1])
        return np.column_stack([lo, hi])


class Disk(Region):
    def __init__(self, center, radius, window=None):
        super().__init__(window or Window(dim=2))
        self.center = np.asarray(center, dtype=float)
        self.radius = float(radius)
        if self.radius <= 0:
            raise ValidationError("disk radius must be positive")

    def exact_area(self):
        return np.pi * self.radius**2

    def contains(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        return np.linalg.norm(coords - self.center, axis=1) <= self.radius

    def bounding_box(self):
        c, r = self.center, self.radius
        return self._clip_box(np.column_stack([c - r, c + r]))


class Annulus(Region):
    def __init__(self, center, r_out, r_in, window=None):
        super().__init__(window or Window(dim=2))
        self.center = np.asarray(center, dtype=float)
        self.r_out = float(r_out)
        self.r_in = float(r_in)
        if not (self.r_out > self.r_in >= 0.0):
            raise ValidationError("annulus needs r_out > r_in >= 0")

    def exact_area(self):
        return np.pi * (self.r_out**2 - self.r_in**2)

    def contains(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        d = np.linalg.norm(coords - self.center, axis=1)
        return (d >= self.r_in) & (d <= self.r_out)

    def bounding_box(self):
        c, r = self.center, self.r_out
        return self._clip_box(np.column_stack([c - r, c + r]))


class PolygonRegion(Region):
    """A simple polygon; self-intersection is the caller's problem."""

    def __init__(self, vertices, window=None):
        super().__init__(window or Window(dim=2))
        v = np.asarray(vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 2 or len(v) < 3:
            raise ValidationError("polygon region needs at least 3 planar vertices")
        self.vertices = v

    def exact_area(self):
        return abs(shoelace_area(self.vertices))

    def contains(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        v = self.vertices
        n = len(v)
        inside = np.zeros(len(coords), dtype=bool)
        px, py = coords[:, 0], coords[:, 1]
        for i in range(n):
            ax, ay = v[i]
            bx, by = v[(i + 1) % n]
            crosses = (ay > py) != (by > py)
            with np.errstate(divide="ignore", invalid="ignore"):
                t = (py - ay) / (by - ay)
                xs = ax + t * (bx - ax)
            hit = crosses & (xs > px)
            inside ^= hit
        return inside

    def bounding_box(self):
        v = self.vertices
        return self._clip_box(np.column_stack([v.min(axis=0), v.max(axis=0)]))


class UnionRegion(Region):
    """Union of pairwise-disjoint child regions."""

    def __init__(self, children):
        if not children:
            raise ValidationError("union needs at least one child region")
        window = children[0].window
        for c in children[1:]:
            if c.window != window:
                raise ValidationError("union children must share one window")
        super().__init__(window)
        self.children = list(children)

    def exact_area(self):
        return float(sum(c.exact_area() for c in self.children))

    def contains(self, coords):
        coords = np.atleast_2d(np.asarray(coords, dtype=float))
        out = np.zeros(len(coords), dtype=bool)
        for c in self.children:
            out |= c.contains(coords)
        return out

    def bounding_box(self):
        boxes = [c.bounding_box() for c in self.children]
        lo = np.min([b[:, 0] for b in boxes], axis=0)
        hi = np.max([b[:, 1] for b in boxes], axis=0)
        return np.column_stack([lo, hi])


class DifferenceRegion(Region):
    """Set difference minuend minus subtrahend, with the subtrahend
    contained in the minuend."""

    def __init__(self, minuend, subtrahend):
        if minuend.window != subtrahend.window:
            raise ValidationError("difference parts must share one window")
        super().__init__(minuend.window)
        self.minuend = minuend
        self.subtrahend = subtrahend
        if subtrahend.exact_area() >= minuend.exact_area():
            raise ValidationError("subtracted region must be smaller than the base region")

    def exact_area(self):
        return self.minuend.exact_area() - self.subtrahend.exact_area()

    def contains(self, coords):
        return self.minuend.contains(coords) & ~self.subtrahend.contains(coords)

    def bounding_box(self):
        return self.minuend.bounding_box()


class IntervalRegion(Region):
    def __init__(self, a, b, window=None):
        super().__init__(window or Window(dim=1))
        if self.window.dim != 1:
            raise ValidationError("interval region lives in dimension 1")
        self.a = float(a)
        self.b = float(b)
        if not self.b > self.a:
            raise ValidationError("interval needs b > a")

    def exact_area(self):
        return self.b - self.a

    def contains(self, coords):
        coords = np.asarray(coords, dtype=float)
        if coords.ndim == 2:
            coords = coords[:, 0]
        return (coords >= self.a) & (coords <= self.b)

    def bounding_box(self):
        return self._clip_box(np.array([[self.a, self.b]]))
