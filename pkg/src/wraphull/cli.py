"""Command line interface.

Machine-readable rows go to standard output and to CSV files under
--out; logs and progress go to standard error. Exit code 0 means the
command completed with every per-cell failure rate under 1%; exit 2
flags invalid input (bad flags, malformed point files, duplicate
points); exit 3 flags geometric failure.

The environment variable WRAPHULL_SEED, when set, overrides --seed.
"""

import argparse
import logging
import os
import sys

import numpy as np

from .base import PointSet, Window
from .errors import GeometryError, ValidationError, WrapHullError
from .estimators import (
    LepskiConfig,
    classify,
    compact_oracle_estimate,
    data_driven_estimate,
    lepski_select,
    oracle_estimate,
)
from .geometry.compact import compact_hull
from .geometry.convex import convex_hull
from .geometry.halfspace import evenly_spaced_normals, fixed_normal_hull
from .geometry.interval import interval_hull
from .geometry.rconvex import r_convex_hull
from .geometry.serialize import dump_hull
from .harness import csvio
from .harness.experiments import (
    DEFAULT_LEPSKI,
    PI_N_VALUES,
    POLYTOPE_LAMBDAS,
    TABLE1_N_VALUES,
    TABLE1_R_VALUES,
    TABLE2_N_VALUES,
    ExperimentConfig,
    run_efron_check,
    run_pi_rates,
    run_polytope_rate,
    run_table1,
    run_table2_adaptive,
)
from .harness.raster import missing_volume
from .harness.regions import REGION_NAMES, benchmark_region
from .sampling import RngConfig, parse_points_csv, points_to_csv, sample_ppp

log = logging.getLogger("wraphull")

HULL_CLASS_CHOICES = ("convex", "rconvex", "fixed-normal", "compact", "interval")


def _parse_int_list(text, flag):
    try:
        values = tuple(int(part) for part in text.split(",") if part != "")
    except ValueError:
        raise ValidationError(f"{flag} expects a comma-separated list of integers, got {text!r}")
    if not values:
        raise ValidationError(f"{flag} got an empty list")
    return values


def _parse_float_list(text, flag):
    try:
        values = tuple(float(part) for part in text.split(",") if part != "")
    except ValueError:
        raise ValidationError(f"{flag} expects a comma-separated list of numbers, got {text!r}")
    if not values:
        raise ValidationError(f"{flag} got an empty list")
    return values


def _parse_r_grid(text):
    """--r-grid R_MIN:R_MAX:K, for example 0.04:0.5:23."""
    parts = text.split(":")
    if len(parts) != 3:
        raise ValidationError("--r-grid expects R_MIN:R_MAX:K")
    try:
        r_min, r_max, K = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise ValidationError("--r-grid expects two numbers and an integer, R_MIN:R_MAX:K")
    return r_min, r_max, K


def _parse_window(text):
    values = _parse_float_list(text, "--window")
    if len(values) == 2:
        return Window(dim=1, bounds=[[values[0], values[1]]])
    if len(values) == 4:
        return Window(dim=2, bounds=[[values[0], values[1]], [values[2], values[3]]])
    raise ValidationError("--window expects x0,x1 for 1D or x0,x1,y0,y1 for 2D")


def _resolve_seed(args):
    env = os.environ.get("WRAPHULL_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"WRAPHULL_SEED must be an integer, got {env!r}")
    return args.seed


def _read_points_text(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}")


def _load_points(args):
    window = _parse_window(args.window) if args.window else None
    text = _read_points_text(args.points)
    dim = 1 if args.hull_class == "interval" else 2
    if window is not None and window.dim != dim:
        raise ValidationError(f"--window has dimension {window.dim}, class needs {dim}")
    points = parse_points_csv(text, window=window, dim=dim)
    if window is None:
        return points, 1.0
    # normalize into the unit window; estimates scale back by the
    # window's volume (the Jacobian of the affine map)
    b = window.bounds
    span = b[:, 1] - b[:, 0]
    unit_coords = (points.coords - b[:, 0]) / span
    return PointSet(unit_coords), float(window.area())


def _build_hull(args, points):
    if args.hull_class == "convex":
        return convex_hull(points), None
    if args.hull_class == "rconvex":
        if args.r is not None:
            return r_convex_hull(points, args.r), None
        if args.r_grid is not None:
            cfg = _lepski_from_args(args)
            r_hat, _, _ = lepski_select(points, cfg)
            log.info("adaptive radius selected r=%g", r_hat)
            return r_convex_hull(points, r_hat), r_hat
        raise ValidationError("--class rconvex needs --r or --r-grid")
    if args.hull_class == "fixed-normal":
        if args.normals is None:
            raise ValidationError("--class fixed-normal needs --normals")
        return fixed_normal_hull(points, evenly_spaced_normals(args.normals)), None
    if args.hull_class == "compact":
        return compact_hull(points), None
    return interval_hull(points), None


def _hull_param(args, hull, r_hat):
    if args.hull_class == "rconvex":
        return r_hat if r_hat is not None else args.r
    if args.hull_class == "fixed-normal":
        return args.normals
    return 0


def cmd_estimate(args):
    points, scale = _load_points(args)
    hull, r_hat = _build_hull(args, points)
    stats = classify(points, hull)
    hull_area = hull.area() * scale
    base = {
        "class": args.hull_class,
        "r": _hull_param(args, hull, r_hat) or 0,
        "lambda": args.intensity if args.intensity is not None else 0,
        "n": stats.n_total,
        "n_boundary": stats.n_boundary,
        "n_interior": stats.n_interior,
        "n_isolated": stats.n_isolated,
        "hull_area": hull_area,
    }
    rows = []
    if args.hull_class == "compact":
        if args.intensity is None:
            raise ValidationError("--class compact needs --lambda")
        est = compact_oracle_estimate(stats.n_total, args.intensity)
        rows.append({**base, "estimate_kind": est.kind, "value": est.value * scale})
    else:
        est = data_driven_estimate(stats, hull.area())
        rows.append({**base, "estimate_kind": est.kind, "value": est.value * scale})
        if args.intensity is not None:
            oest = oracle_estimate(stats, hull.area(), args.intensity)
            rows.append({**base, "estimate_kind": oest.kind, "value": oest.value * scale})
    print(csvio.ESTIMATE_HEADER)
    for row in rows:
        print(csvio.format_row("estimate", row))
    if args.hull_out:
        with open(args.hull_out, "w") as fh:
            fh.write(dump_hull(hull))
        log.info("wrote hull geometry to %s", args.hull_out)
    return 0


def cmd_hull(args):
    points, _ = _load_points(args)
    hull, _ = _build_hull(args, points)
    text = dump_hull(hull)
    if args.hull_out:
        with open(args.hull_out, "w") as fh:
            fh.write(text)
        log.info("wrote hull geometry to %s", args.hull_out)
    else:
        sys.stdout.write(text)
    return 0


def _emit(result, schema, filename, manifest, args):
    rows = result["rows"]
    print(getattr(csvio, f"{schema.upper()}_HEADER"))
    for row in rows:
        print(csvio.format_row(schema, row))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, filename)
        csvio.write_rows(path, schema, rows)
        csvio.write_manifest(csvio.manifest_path_for(path), manifest)
        log.info("wrote %s", path)
    return 0 if result["ok"] else 1


def cmd_table1(args):
    seed = _resolve_seed(args)
    r_values = _parse_float_list(args.r_list, "--r") if args.r_list else TABLE1_R_VALUES
    n_values = _parse_int_list(args.n, "--n") if args.n else TABLE1_N_VALUES
    cfg = ExperimentConfig(
        experiment="table1", region_name=args.region, r_values=r_values,
        n_values=n_values, replicates=args.reps, seed=seed, threads=args.threads,
    )
    result = run_table1(cfg)
    manifest = {
        "experiment": "table1", "region": args.region, "r_values": r_values,
        "n_values": n_values, "replicates": args.reps, "seed": seed,
    }
    return _emit(result, "table1", "table1.csv", manifest, args)


def _lepski_from_args(args):
    if args.r_grid:
        r_min, r_max, K = _parse_r_grid(args.r_grid)
    else:
        r_min, r_max, K = DEFAULT_LEPSKI.r_min, DEFAULT_LEPSKI.r_max, DEFAULT_LEPSKI.K
    rule = args.kappa_rule or DEFAULT_LEPSKI.kappa_rule
    scale = args.kappa_scale if args.kappa_scale is not None else DEFAULT_LEPSKI.kappa_scale
    return LepskiConfig(r_min, r_max, K, kappa_rule=rule, kappa_scale=scale)


def cmd_table2(args):
    seed = _resolve_seed(args)
    n_values = _parse_int_list(args.n, "--n") if args.n else TABLE2_N_VALUES
    lepski = _lepski_from_args(args)
    cfg = ExperimentConfig(
        experiment="table2_adaptive", region_name=args.region, n_values=n_values,
        lepski=lepski, replicates=args.reps, seed=seed, threads=args.threads,
    )
    result = run_table2_adaptive(cfg)
    manifest = {
        "experiment": "table2_adaptive", "region": args.region, "n_values": n_values,
        "replicates": args.reps, "seed": seed, "r_min": lepski.r_min, "r_max": lepski.r_max,
        "grid_size": lepski.K, "kappa_rule": lepski.kappa_rule, "kappa_scale": lepski.kappa_scale,
    }
    return _emit(result, "table2", "table2.csv", manifest, args)


def cmd_pi(args):
    seed = _resolve_seed(args)
    n_values = _parse_int_list(args.n, "--n") if args.n else PI_N_VALUES
    cfg = ExperimentConfig(
        experiment="pi_rates", region_name="square", n_values=n_values,
        replicates=args.reps, seed=seed, threads=args.threads,
    )
    result = run_pi_rates(cfg)
    manifest = {
        "experiment": "pi_rates", "n_values": n_values, "replicates": args.reps, "seed": seed,
    }
    code = _emit(result, "pi", "pi.csv", manifest, args)
    for name, fit in result["fits"].items():
        print(f"slope,{name},{csvio.format_value(fit.slope)},{csvio.format_value(fit.r_squared)}")
    return code


def cmd_efron(args):
    seed = _resolve_seed(args)
    intensity = args.intensity if args.intensity is not None else 200.0
    cfg = ExperimentConfig(
        experiment="efron_check", region_name=args.region or "disk",
        intensity=intensity, replicates=args.reps, seed=seed, threads=args.threads,
    )
    result = run_efron_check(cfg)
    manifest = {
        "experiment": "efron_check", "region": cfg.region_name, "lambda": intensity,
        "replicates": args.reps, "seed": seed,
    }
    code = _emit(result, "efron", "efron.csv", manifest, args)
    report = result["report"]
    verdict = "PASS" if report["pass"] else "FAIL"
    print(f"{verdict},z={csvio.format_value(report['z'])}")
    return code


def cmd_polytope_rate(args):
    seed = _resolve_seed(args)
    lambdas = _parse_float_list(args.intensity_list, "--lambda") if args.intensity_list else POLYTOPE_LAMBDAS
    cfg = ExperimentConfig(
        experiment="polytope_rate", normals_k=args.normals or 4,
        lambda_values=lambdas, replicates=args.reps, seed=seed, threads=args.threads,
    )
    result = run_polytope_rate(cfg)
    manifest = {
        "experiment": "polytope_rate", "normals": cfg.normals_k, "lambda_values": lambdas,
        "replicates": args.reps, "seed": seed,
    }
    code = _emit(result, "polytope", "polytope.csv", manifest, args)
    verdict = "PASS" if result["bounded"] else "FAIL"
    print(f"{verdict},max_ratio={csvio.format_value(result['max_ratio'])}")
    return code


def cmd_simulate(args):
    seed = _resolve_seed(args)
    region = benchmark_region(args.region)
    intensity = args.intensity if args.intensity is not None else 300.0
    sample = sample_ppp(region, intensity, RngConfig(seed))
    log.info("sampled %d points from %s at intensity %g", sample.n, args.region, intensity)
    text = points_to_csv(sample.points)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, "points.csv")
        with open(path, "w") as fh:
            fh.write(text)
        csvio.write_manifest(csvio.manifest_path_for(path), {
            "experiment": "single_run", "region": args.region,
            "lambda": intensity, "seed": seed,
        })
        log.info("wrote %s", path)
    else:
        sys.stdout.write(text)
    if args.hull_out:
        if sample.n == 0:
            raise ValidationError("empty sample; no hull to write")
        hull, _ = _build_hull(args, sample.points)
        with open(args.hull_out, "w") as fh:
            fh.write(dump_hull(hull))
        log.info("wrote hull geometry to %s", args.hull_out)
        gap = missing_volume(region, hull, args.raster)
        log.info("missing volume (region minus hull, raster %d): %g", args.raster, gap)
    return 0


def _add_common_flags(sp, experiment=False):
    sp.add_argument("--seed", type=int, default=0, help="RNG seed (WRAPHULL_SEED overrides)")
    if experiment:
        sp.add_argument("--reps", type=int, default=200, help="Monte Carlo replicates")
        sp.add_argument("--threads", type=int, default=1, help="worker processes")
        sp.add_argument("--out", help="directory for CSV and manifest output")


def _add_points_flags(sp):
    sp.add_argument("points", help="points CSV file, or - for standard input")
    sp.add_argument("--class", dest="hull_class", choices=HULL_CLASS_CHOICES,
                    default="convex", help="hull class to build")
    sp.add_argument("--r", type=float, help="radius for --class rconvex")
    sp.add_argument("--r-grid", help="adaptive radius grid R_MIN:R_MAX:K")
    sp.add_argument("--kappa-rule", default=None, help="adaptive threshold rule")
    sp.add_argument("--kappa-scale", type=float, default=None, help="adaptive threshold scale")
    sp.add_argument("--normals", type=int, help="count of evenly spaced normals")
    sp.add_argument("--lambda", dest="intensity", type=float, help="known sampling intensity")
    sp.add_argument("--window", help="data window x0,x1[,y0,y1]; default unit window")
    sp.add_argument("--hull-out", help="write hull geometry text to this file")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="wraphull",
        description="Volume estimation from uniform point samples via wrapping hulls.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("estimate", help="estimate volume from a points file")
    _add_points_flags(sp)
    sp.set_defaults(fn=cmd_estimate)

    sp = sub.add_parser("hull", help="build and print hull geometry from a points file")
    _add_points_flags(sp)
    sp.set_defaults(fn=cmd_hull)

    sp = sub.add_parser("table1", help="fixed-radius benchmark on the annulus")
    sp.add_argument("--region", default="annulus", choices=REGION_NAMES)
    sp.add_argument("--r", dest="r_list", help="comma-separated radii")
    sp.add_argument("--n", help="comma-separated expected point counts")
    _add_common_flags(sp, experiment=True)
    sp.set_defaults(fn=cmd_table1)

    sp = sub.add_parser("table2", help="adaptive-radius benchmark on the annulus")
    sp.add_argument("--region", default="annulus", choices=REGION_NAMES)
    sp.add_argument("--n", help="comma-separated expected point counts")
    sp.add_argument("--r-grid", help="radius grid R_MIN:R_MAX:K")
    sp.add_argument("--kappa-rule", default=None, help="adaptive threshold rule")
    sp.add_argument("--kappa-scale", type=float, default=None, help="adaptive threshold scale")
    _add_common_flags(sp, experiment=True)
    sp.set_defaults(fn=cmd_table2)

    sp = sub.add_parser("pi", help="pi estimation rate experiment")
    sp.add_argument("--n", help="comma-separated sample sizes")
    _add_common_flags(sp, experiment=True)
    sp.set_defaults(fn=cmd_pi)

    sp = sub.add_parser("efron", help="boundary-count identity check on a disk")
    sp.add_argument("--region", default="disk", choices=REGION_NAMES)
    sp.add_argument("--lambda", dest="intensity", type=float, help="sampling intensity")
    _add_common_flags(sp, experiment=True)
    sp.set_defaults(fn=cmd_efron)

    sp = sub.add_parser("polytope-rate", help="fixed-normal polytope rate experiment")
    sp.add_argument("--normals", type=int, default=4, help="number of facet normals")
    sp.add_argument("--lambda", dest="intensity_list", help="comma-separated intensities")
    _add_common_flags(sp, experiment=True)
    sp.set_defaults(fn=cmd_polytope_rate)

    sp = sub.add_parser("simulate", help="draw one seeded sample from a named region")
    sp.add_argument("--region", default="annulus", choices=REGION_NAMES)
    sp.add_argument("--lambda", dest="intensity", type=float, help="sampling intensity")
    sp.add_argument("--class", dest="hull_class", choices=HULL_CLASS_CHOICES,
                    default="rconvex", help="hull class for --hull-out")
    sp.add_argument("--r", type=float, help="radius for --class rconvex")
    sp.add_argument("--r-grid", help="adaptive radius grid R_MIN:R_MAX:K")
    sp.add_argument("--kappa-rule", default=None, help="adaptive threshold rule")
    sp.add_argument("--kappa-scale", type=float, default=None, help="adaptive threshold scale")
    sp.add_argument("--normals", type=int, help="count of evenly spaced normals")
    sp.add_argument("--raster", type=int, default=1024, help="raster resolution for diagnostics")
    sp.add_argument("--out", help="directory for points.csv and manifest")
    sp.add_argument("--hull-out", help="write hull geometry text to this file")
    sp.add_argument("--seed", type=int, default=0, help="RNG seed (WRAPHULL_SEED overrides)")
    sp.set_defaults(fn=cmd_simulate)

    return parser


def main(argv=None):
    logging.basicConfig(stream=sys.stderr, level=logging.INFO, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ValidationError as exc:
        log.error("%s", exc)
        return 2
    except GeometryError as exc:
        log.error("%s", exc)
        return 3
    except WrapHullError as exc:
        log.error("%s", exc)
        return 2


if __name__ == "__main__":
    sys.exit(main())
