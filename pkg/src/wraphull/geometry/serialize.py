"""Line-oriented text format for hull geometry.

One header line `type,param,area` where param is the radius for r-convex
hulls, the direction count for fixed-normal hulls and 0 otherwise. Then
one line per vertex or edge descriptor, comma-separated reals printed
with 17 significant digits.

Per type:

* convex / compact: one `x,y` line per vertex (per sample point).
* interval: a single `low,high` line.
* fixed-normal: one `x,y` line per polygon vertex, then one `ux,uy,h`
  line per facet direction (the field count tells the two apart).
* rconvex: nine fields per line,
  `loop,kind,ax,ay,bx,by,cx,cy,bulge`. loop >= 0 indexes a boundary
  loop and kind is 0 (straight) or 1 (arc, with circle center c and a
  bulge sign). loop = -1 carries an isolated point in (ax, ay) and
  loop = -2 an isolated segment in (ax, ay, bx, by).
"""

import numpy as np

from ..errors import ValidationError
from .compact import CompactHull
from .convex import ConvexPolygon
from .halfspace import HalfspaceHull
from .interval import IntervalHull
from .rconvex import ArcPolygon


def _fmt(*values):
    return ",".join(f"{float(v):.17g}" for v in values)


def dump_hull(hull):
    """Serialize any hull type to the text format; returns a string."""
    lines = []
    if isinstance(hull, ConvexPolygon):
        lines.append(f"convex,0,{hull.area():.17g}")
        for v in hull.vertices:
            lines.append(_fmt(v[0], v[1]))
    elif isinstance(hull, IntervalHull):
        lines.append(f"interval,0,{hull.area():.17g}")
        lines.append(_fmt(hull.low, hull.high))
    elif isinstance(hull, CompactHull):
        lines.append(f"compact,0,{hull.area():.17g}")
        for v in hull.coords:
            lines.append(_fmt(v[0], v[1]))
    elif isinstance(hull, HalfspaceHull):
        lines.append(f"fixed-normal,{hull.k},{hull.area():.17g}")
        for v in hull.polygon.vertices:
            lines.append(_fmt(v[0], v[1]))
        for u, h in zip(hull.normals, hull.offsets):
            lines.append(_fmt(u[0], u[1], h))
    elif isinstance(hull, ArcPolygon):
        lines.append(f"rconvex,{hull.radius:.17g},{hull.area():.17g}")
        for li, loop in enumerate(hull.loops):
            for e in loop:
                kind = 1 if e.kind == "arc" else 0
                c = e.center if e.center is not None else (0.0, 0.0)
                lines.append(
                    _fmt(li, kind, e.a[0], e.a[1], e.b[0], e.b[1], c[0], c[1], e.bulge)
                )
        for p in hull.isolated_points:
            lines.append(_fmt(-1, 2, p[0], p[1], 0, 0, 0, 0, 0))
        for seg in hull.isolated_segments:
            lines.append(_fmt(-2, 3, seg[0, 0], seg[0, 1], seg[1, 0], seg[1, 1], 0, 0, 0))
    else:
        raise ValidationError(f"cannot serialize hull of type {type(hull).__name__}")
    return "\n".join(lines) + "\n"


def load_hull(text):
    """Parse the text format back into a plain dict (no hull objects)."""
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise ValidationError("empty hull text")
    head = lines[0].split(",")
    if len(head) != 3:
        raise ValidationError("hull header must have three fields")
    kind = head[0]
    out = {"type": kind, "param": float(head[1]), "area": float(head[2])}
    body = [[float(x) for x in ln.split(",")] for ln in lines[1:]]
    if kind in ("convex", "compact"):
        out["vertices"] = np.array(body).reshape(-1, 2)
    elif kind == "interval":
        (pair,) = body
        out["low"], out["high"] = pair
    elif kind == "fixed-normal":
        out["vertices"] = np.array([row for row in body if len(row) == 2]).reshape(-1, 2)
        normals = [row for row in body if len(row) == 3]
        out["normals"] = np.array([row[:2] for row in normals]).reshape(-1, 2)
        out["offsets"] = np.array([row[2] for row in normals])
    elif kind == "rconvex":
        edges, points, segments = [], [], []
        for row in body:
            if len(row) != 9:
                raise ValidationError("rconvex descriptor lines need nine fields")
            tag = int(row[0])
            if tag >= 0:
                edges.append(
                    {
                        "loop": tag,
                        "kind": "arc" if int(row[1]) == 1 else "straight",
                        "a": (row[2], row[3]),
                        "b": (row[4], row[5]),
                        "center": (row[6], row[7]),
                        "bulge": int(row[8]),
                    }
                )
            elif tag == -1:
                points.append((row[2], row[3]))
            elif tag == -2:
                segments.append(((row[2], row[3]), (row[4], row[5])))
            else:
                raise ValidationError(f"unknown descriptor tag {tag}")
        out["edges"] = edges
        out["isolated_points"] = np.array(points).reshape(-1, 2)
        out["isolated_segments"] = segments
    else:
        raise ValidationError(f"unknown hull type {kind!r}")
    return out
