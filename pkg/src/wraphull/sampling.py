"""Seeded sampling of point patterns on regions.

Draws are reproducible bit for bit: a (seed, stream_id) pair names one
substream, built from numpy's SeedSequence, and every replicate of a
Monte Carlo run owns its own stream_id. Points are generated by
rejection from the region's bounding box, which is correct for any
region composite at the cost of some rejected proposals.
"""

from dataclasses import dataclass

import numpy as np

from .base import PointSet
from .errors import ValidationError, ZeroMeasure

_MAX_PROPOSAL_ROUNDS = 1000


@dataclass(frozen=True)
class RngConfig:
    """Names one reproducible stream. stream_id may be an int or a tuple
    of ints (for example (cell index, replicate index) in a grid run)."""

    seed: int
    stream_id: object = 0

    def generator(self):
        key = self.stream_id if isinstance(self.stream_id, tuple) else (self.stream_id,)
        ss = np.random.SeedSequence(entropy=int(self.seed), spawn_key=tuple(int(k) for k in key))
        return np.random.Generator(np.random.PCG64(ss))


@dataclass(frozen=True)
class PppSample:
    points: PointSet
    intensity: float
    region: object

    @property
    def n(self):
        return len(self.points)


def _rejection_sample(region, n, gen):
    """n accepted uniform points plus the proposal count it took."""
    box = region.bounding_box()
    lo, hi = box[:, 0], box[:, 1]
    dim = len(lo)
    if np.any(hi <= lo):
        raise ZeroMeasure("region bounding box is degenerate")
    accepted = []
    got = 0
    proposals = 0
    chunk = max(256, 2 * n)
    for _ in range(_MAX_PROPOSAL_ROUNDS):
        if got >= n:
            break
        draw = gen.uniform(lo, hi, size=(chunk, dim))
        proposals += chunk
        keep = region.contains(draw)
        hits = draw[keep]
        if len(hits):
            accepted.append(hits)
            got += len(hits)
    else:
        raise ZeroMeasure("rejection sampling made no progress; region has no mass")
    coords = np.concatenate(accepted)[:n] if accepted else np.zeros((0, dim))
    return coords, proposals


def sample_ppp(region, intensity, rng):
    """Poisson point process on the region: the point count is Poisson
    with mean intensity times area, then that many uniform points."""
    intensity = float(intensity)
    if intensity <= 0:
        raise ValidationError("intensity must be positive")
    area = region.exact_area()
    if area <= 0:
        raise ZeroMeasure("region must have positive area")
    gen = rng.generator()
    n = int(gen.poisson(intensity * area))
    if n == 0:
        coords = np.zeros((0, region.window.dim))
    else:
        coords, _ = _rejection_sample(region, n, gen)
    return PppSample(PointSet(coords, region.window), intensity, region)


def sample_uniform_n(region, n, rng):
    """Exactly n independent uniform points on the region."""
    n = int(n)
    if n < 1:
        raise ValidationError("sample size must be at least 1")
    if region.exact_area() <= 0:
        raise ZeroMeasure("region must have positive area")
    gen = rng.generator()
    coords, _ = _rejection_sample(region, n, gen)
    return PointSet(coords, region.window)


def points_to_csv(points):
    """Serialize a sample to CSV with 17 significant digits."""
    if isinstance(points, PointSet):
        coords = points.coords
    else:
        coords = np.atleast_2d(np.asarray(points, dtype=float))
    header = "x" if coords.shape[1] == 1 else "x,y"
    lines = [header]
    for row in coords:
        lines.append(",".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def parse_points_csv(text, window=None, dim=None):
    """Parse a points CSV back into a PointSet.

    Malformed rows raise ValidationError naming the 1-based line number.
    A dim of 1 or 2, when given, is enforced against the file.
    """
    lines = text.splitlines()
    rows = []
    found_dim = dim
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if lineno == 1 and line.lower() in ("x", "x,y"):
            header_dim = 1 if line.lower() == "x" else 2
            if dim is not None and header_dim != dim:
                raise ValidationError(
                    f"line {lineno}: file holds {header_dim}-dimensional points, expected {dim}"
                )
            found_dim = header_dim
            continue
        parts = line.split(",")
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ValidationError(f"line {lineno}: could not parse {line!r} as coordinates")
        if found_dim is None:
            found_dim = len(values)
        if len(values) != found_dim or found_dim not in (1, 2):
            raise ValidationError(f"line {lineno}: expected {found_dim} comma-separated values")
        rows.append(values)
    if not rows:
        return PointSet(np.zeros((0, found_dim or 2)), window)
    return PointSet(np.array(rows), window)
