"""Parser for the hull geometry text format.

The format is line-oriented: a `type,param,area` header followed by
plain comma-separated floats, one record per line. `param` carries the
radius for r-convex hulls and the direction count for fixed-normal
hulls; it is 0 otherwise. Body lines by type:

* convex, compact: one `x,y` line per vertex (per sample point for
  compact hulls).
* interval: a single `low,high` line.
* fixed-normal: `x,y` polygon vertex lines followed by `ux,uy,h` facet
  lines; the field count distinguishes the two.
* rconvex: nine fields per line, `loop,kind,ax,ay,bx,by,cx,cy,bulge`.
  A non-negative loop id groups edges into one closed boundary loop;
  kind 1 is a circular arc from (ax,ay) to (bx,by) with center (cx,cy)
  and a bulge sign, kind 0 a straight edge. loop -1 carries an isolated
  point in (ax,ay) and loop -2 an isolated segment in (ax,ay,bx,by).

The parser is self-contained on purpose: this text format is the
interface between the estimation package and the plotting package, so
it is read here against the format alone, with no shared code.
"""

import numpy as np

from .errors import PlotError

HULL_TYPES = ("compact", "convex", "fixed-normal", "interval", "rconvex")


def _floats(fields, lineno):
    try:
        return [float(f) for f in fields]
    except ValueError:
        raise PlotError(f"hull text line {lineno}: non-numeric field in {fields!r}") from None


def parse_hull_text(text):
    """Parse hull text into a dict keyed by 'type', 'param', 'area' plus
    type-specific geometry arrays. Raises PlotError on malformed input."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise PlotError("hull text is empty")
    head = lines[0].split(",")
    if len(head) != 3:
        raise PlotError(f"hull text header needs 3 fields, got {lines[0]!r}")
    kind = head[0]
    if kind not in HULL_TYPES:
        raise PlotError(f"unknown hull type {kind!r}; expected one of {', '.join(HULL_TYPES)}")
    param, area = _floats(head[1:], 1)
    body = [(_floats(ln.split(","), i + 2), i + 2) for i, ln in enumerate(lines[1:])]
    out = {"type": kind, "param": param, "area": area}

    if kind in ("convex", "compact"):
        for fields, lineno in body:
            if len(fields) != 2:
                raise PlotError(f"hull text line {lineno}: expected x,y, got {len(fields)} fields")
        pts = np.array([f for f, _ in body], dtype=float).reshape(-1, 2)
        out["vertices" if kind == "convex" else "points"] = pts
        return out

    if kind == "interval":
        if len(body) != 1 or len(body[0][0]) != 2:
            raise PlotError("interval hull text needs exactly one low,high line")
        out["low"], out["high"] = body[0][0]
        return out

    if kind == "fixed-normal":
        verts, normals = [], []
        for fields, lineno in body:
            if len(fields) == 2:
                if normals:
                    raise PlotError(f"hull text line {lineno}: vertex after facet lines")
                verts.append(fields)
            elif len(fields) == 3:
                normals.append(fields)
            else:
                raise PlotError(f"hull text line {lineno}: expected 2 or 3 fields, got {len(fields)}")
        out["vertices"] = np.array(verts, dtype=float).reshape(-1, 2)
        out["normals"] = np.array(normals, dtype=float).reshape(-1, 3)
        return out

    # rconvex
    loops = {}
    iso_pts, iso_segs = [], []
    for fields, lineno in body:
        if len(fields) != 9:
            raise PlotError(f"hull text line {lineno}: rconvex records need 9 fields, got {len(fields)}")
        tag = int(fields[0])
        if tag >= 0:
            edge = {
                "kind": "arc" if int(fields[1]) == 1 else "straight",
                "a": np.array(fields[2:4]),
                "b": np.array(fields[4:6]),
                "center": np.array(fields[6:8]),
                "bulge": int(fields[8]),
            }
            loops.setdefault(tag, []).append(edge)
        elif tag == -1:
            iso_pts.append(fields[2:4])
        elif tag == -2:
            iso_segs.append([fields[2:4], fields[4:6]])
        else:
            raise PlotError(f"hull text line {lineno}: unknown loop tag {tag}")
    out["radius"] = param
    out["loops"] = [loops[k] for k in sorted(loops)]
    out["isolated_points"] = np.array(iso_pts, dtype=float).reshape(-1, 2)
    out["isolated_segments"] = np.array(iso_segs, dtype=float).reshape(-1, 2, 2)
    return out


def load_hull_file(path):
    try:
        with open(path) as fh:
            return parse_hull_text(fh.read())
    except OSError as exc:
        raise PlotError(f"cannot read hull file {path}: {exc}") from None
