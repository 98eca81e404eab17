"""The four figure kinds rendered from harness outputs.

* rmse_vs_n: one RMSE curve per radius against sample size, from the
  fixed-radius benchmark CSV.
* rmse_vs_r: one RMSE curve per sample size against the radius, from
  the same CSV.
* pi_rates: log-log RMSE decay of the two area-deficit estimators with
  least-squares slope annotations.
* hull_overlay: a serialized hull drawn over its sample points with the
  generating region's outline for reference.

Nothing here computes statistics; every plotted value comes straight
from a CSV. The only derived numbers are the slope annotations on the
rate figure, fitted to the already-plotted points, and those never feed
back into any output file. Rendering is deterministic: fixed figure
geometry, fixed dpi, pinned image metadata, so rerendering the same
inputs reproduces the output byte for byte.
"""

import csv
import math
import os
from dataclasses import dataclass

import numpy as np
from matplotlib.figure import Figure

from .errors import PlotError
from .hulltext import load_hull_file

FIG_DPI = 150
ARC_STEP_DEG = 1.0

HULL_COLOR = "tab:blue"
POINT_COLOR = "black"
OUTLINE_COLOR = "0.55"


# ---------------------------------------------------------------------------
# plot specification


@dataclass(frozen=True)
class PlotSpec:
    """What to draw: input paths, figure kind, output path, axis flags."""

    kind: str
    inputs: tuple
    out: str
    logx: bool = False
    logy: bool = False
    hull: str = None
    region: str = None
    ycol: str = None

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))
        if self.kind not in FIGURE_KINDS:
            raise PlotError(
                f"unknown figure kind {self.kind!r}; expected one of {', '.join(sorted(FIGURE_KINDS))}"
            )
        if not self.inputs:
            raise PlotError("no input files given")
        if not self.out:
            raise PlotError("no output path given")


# ---------------------------------------------------------------------------
# CSV access


def read_csv_columns(path, required):
    """Read a harness CSV into {column: [raw strings]}.

    Only presence of `required` columns is enforced; extra columns ride
    along unused. The offending column is named on a mismatch.
    """
    try:
        with open(path, newline="") as fh:
            rows = [r for r in csv.reader(fh) if any(f.strip() for f in r)]
    except OSError as exc:
        raise PlotError(f"cannot read {path}: {exc}") from None
    if not rows:
        raise PlotError(f"{path}: empty file, expected a header line")
    header = [c.strip() for c in rows[0]]
    for col in required:
        if col not in header:
            raise PlotError(f"{path}: missing required column {col!r} (found: {', '.join(header)})")
    data = {c: [] for c in header}
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise PlotError(f"{path}: line {i} has {len(row)} fields, header has {len(header)}")
        for c, val in zip(header, row):
            data[c].append(val.strip())
    return data


def column_floats(data, col, path):
    out = []
    for i, raw in enumerate(data[col], start=2):
        try:
            out.append(float(raw))
        except ValueError:
            raise PlotError(f"{path}: column {col!r} line {i}: not a number: {raw!r}") from None
    return np.asarray(out, dtype=float)


def region_from_manifest(points_path):
    """Region name recorded next to a points CSV, if the manifest exists."""
    base, _ = os.path.splitext(points_path)
    manifest = base + ".manifest.txt"
    if not os.path.exists(manifest):
        return None
    with open(manifest) as fh:
        for line in fh:
            key, sep, value = line.strip().partition("=")
            if sep and key == "region":
                return value
    return None


# ---------------------------------------------------------------------------
# geometry helpers


def sample_arc(a, b, center, step_deg=ARC_STEP_DEG):
    """Vertices along the minor arc from a to b around center, spaced at
    most step_deg apart, endpoints exact."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(center, dtype=float)
    va, vb = a - c, b - c
    ra, rb = np.hypot(*va), np.hypot(*vb)
    ta = math.atan2(va[1], va[0])
    tb = math.atan2(vb[1], vb[0])
    delta = (tb - ta + math.pi) % (2.0 * math.pi) - math.pi
    npts = max(2, int(math.ceil(abs(math.degrees(delta)) / step_deg)) + 1)
    t = ta + delta * np.linspace(0.0, 1.0, npts)
    # interpolate the radius so both endpoints land exactly on a and b
    r = np.linspace(ra, rb, npts)
    return c + np.column_stack([r * np.cos(t), r * np.sin(t)])


def _circle(cx, cy, radius):
    t = np.radians(np.arange(361.0))
    return np.column_stack([cx + radius * np.cos(t), cy + radius * np.sin(t)])


def _closed(vertices):
    v = np.asarray(vertices, dtype=float)
    return np.vstack([v, v[:1]])


def region_outline(name):
    """Closed polylines tracing a named benchmark region, or None.

    The coordinates mirror the sampling harness's built-in regions; the
    region name travels through the points manifest, so the outlines are
    part of the file interface rather than shared code.
    """
    c = 0.5
    if name == "annulus":
        return [_circle(c, c, 0.5), _circle(c, c, 0.25)]
    if name == "disk":
        return [_circle(c, c, 0.4)]
    if name == "ring-with-core":
        return [_circle(c, c, 0.5), _circle(c, c, 0.25), _circle(c, c, 0.1)]
    if name == "box":
        return [_closed([[0.1, 0.1], [0.9, 0.1], [0.9, 0.9], [0.1, 0.9]])]
    if name == "square":
        return [_closed([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])]
    if name == "octagon":
        k = 8
        circum = 0.35 / np.cos(np.pi / k)
        ang = 2.0 * np.pi * (np.arange(k) + 0.5) / k
        return [_closed(np.column_stack([c + circum * np.cos(ang), c + circum * np.sin(ang)]))]
    return None


KNOWN_REGIONS = ("annulus", "box", "disk", "octagon", "ring-with-core", "square")


# ---------------------------------------------------------------------------
# figure builders


def _new_axes():
    fig = Figure(figsize=(6.4, 4.8), dpi=FIG_DPI)
    ax = fig.add_subplot(111)
    return fig, ax


def _apply_scales(ax, spec):
    if spec.logx:
        ax.set_xscale("log")
    if spec.logy:
        ax.set_yscale("log")


def _grouped_rmse(spec, group_col, x_col, default_ycol):
    """Shared body of rmse_vs_n and rmse_vs_r: one curve per group value."""
    ycol = spec.ycol or default_ycol
    path = spec.inputs[0]
    data = read_csv_columns(path, [group_col, x_col, ycol])
    fig, ax = _new_axes()
    ax.set_xlabel("sample size n" if x_col == "n" else "radius r")
    ax.set_ylabel(ycol.replace("_", " "))
    groups = column_floats(data, group_col, path)
    xs = column_floats(data, x_col, path)
    ys = column_floats(data, ycol, path)
    for g in sorted(set(groups.tolist())):
        mask = groups == g
        order = np.argsort(xs[mask])
        ax.plot(
            xs[mask][order],
            ys[mask][order],
            marker="o",
            ms=4,
            label=f"{group_col} = {g:g}",
        )
    if len(groups):
        ax.legend()
    _apply_scales(ax, spec)
    return fig


def figure_rmse_vs_n(spec):
    return _grouped_rmse(spec, "r", "n", "rmse_data_driven")


def figure_rmse_vs_r(spec):
    return _grouped_rmse(spec, "n", "r", "rmse_oracle")


def figure_pi_rates(spec):
    path = spec.inputs[0]
    data = read_csv_columns(path, ["n", "rmse_naive", "rmse_opt"])
    fig, ax = _new_axes()
    ax.set_xlabel("point budget n")
    ax.set_ylabel("RMSE")
    n = column_floats(data, "n", path)
    for label, col, marker in (("naive", "rmse_naive", "o"), ("hull-based", "rmse_opt", "s")):
        y = column_floats(data, col, path)
        keep = (n > 0) & (y > 0)
        if not keep.any():
            continue
        order = np.argsort(n[keep])
        xs, ys = n[keep][order], y[keep][order]
        if len(xs) >= 2:
            slope = np.polyfit(np.log10(xs), np.log10(ys), 1)[0]
            label = f"{label} (slope {slope:.2f})"
        ax.plot(xs, ys, marker=marker, ms=4, label=label)
    ax.set_xscale("log")
    ax.set_yscale("log")
    if len(n):
        ax.legend()
    return fig


def _draw_hull(ax, hull):
    kind = hull["type"]
    if kind in ("convex", "fixed-normal"):
        v = hull["vertices"]
        if len(v):
            ring = _closed(v)
            ax.plot(ring[:, 0], ring[:, 1], color=HULL_COLOR, lw=1.4)
    elif kind == "compact":
        pts = hull["points"]
        if len(pts):
            ax.plot(pts[:, 0], pts[:, 1], "o", mfc="none", mec=HULL_COLOR, ms=6)
    elif kind == "interval":
        ax.plot([hull["low"], hull["high"]], [0.0, 0.0], color=HULL_COLOR, lw=2.5)
        ax.plot([hull["low"], hull["high"]], [0.0, 0.0], "|", color=HULL_COLOR, ms=12)
    else:  # rconvex
        for loop in hull["loops"]:
            for edge in loop:
                if edge["kind"] == "arc":
                    pts = sample_arc(edge["a"], edge["b"], edge["center"])
                else:
                    pts = np.vstack([edge["a"], edge["b"]])
                ax.plot(pts[:, 0], pts[:, 1], color=HULL_COLOR, lw=1.4)
        iso = hull["isolated_points"]
        if len(iso):
            ax.plot(iso[:, 0], iso[:, 1], "o", mfc="none", mec=HULL_COLOR, ms=6)
        for seg in hull["isolated_segments"]:
            ax.plot(seg[:, 0], seg[:, 1], color=HULL_COLOR, lw=1.4)


def figure_hull_overlay(spec):
    if not spec.hull:
        raise PlotError("hull_overlay needs --hull pointing at a hull geometry file")
    path = spec.inputs[0]
    data = read_csv_columns(path, ["x"])
    x = column_floats(data, "x", path)
    y = column_floats(data, "y", path) if "y" in data else np.zeros_like(x)
    hull = load_hull_file(spec.hull)

    fig = Figure(figsize=(6.0, 6.0), dpi=FIG_DPI)
    ax = fig.add_subplot(111)
    ax.set_aspect("equal")

    region = spec.region or region_from_manifest(path)
    if spec.region and region_outline(spec.region) is None:
        raise PlotError(f"unknown region {spec.region!r}; known regions: {', '.join(KNOWN_REGIONS)}")
    outline = region_outline(region) if region else None
    if outline:
        for poly in outline:
            ax.plot(poly[:, 0], poly[:, 1], color=OUTLINE_COLOR, lw=1.0, ls="--")

    if len(x):
        ax.plot(x, y, ".", color=POINT_COLOR, ms=3)
    _draw_hull(ax, hull)
    ax.set_xlabel("x")
    ax.set_ylabel("y")
    return fig


FIGURE_KINDS = {
    "hull_overlay": figure_hull_overlay,
    "pi_rates": figure_pi_rates,
    "rmse_vs_n": figure_rmse_vs_n,
    "rmse_vs_r": figure_rmse_vs_r,
}


def _save(fig, out):
    ext = os.path.splitext(out)[1].lower()
    kwargs = {}
    # pin or drop volatile metadata so a rerender is byte-identical
    if ext == ".png":
        kwargs["metadata"] = {"Software": "hullplots"}
    elif ext == ".pdf":
        kwargs["metadata"] = {"CreationDate": None}
    elif ext == ".svg":
        kwargs["metadata"] = {"Date": None}
    try:
        fig.savefig(out, **kwargs)
    except OSError as exc:
        raise PlotError(f"cannot write {out}: {exc}") from None


def render(spec):
    """Build the figure for the spec and write it to spec.out."""
    fig = FIGURE_KINDS[spec.kind](spec)
    _save(fig, spec.out)
    return spec.out
