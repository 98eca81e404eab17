"""Command line entry point.

    render --kind rmse_vs_n --in table1.csv --out fig.png
    render --kind pi_rates --in pi.csv --out rates.png
    render --kind hull_overlay --in points.csv --hull hull.txt --out overlay.png

Exit codes: 0 on success, 2 for unusable input (missing file, schema
mismatch, bad hull text).
"""

import argparse
import sys

from .errors import PlotError
from .figures import FIGURE_KINDS, PlotSpec, render


def build_parser():
    p = argparse.ArgumentParser(
        prog="render",
        description="Render figures from wrapping-hull experiment CSVs.",
    )
    p.add_argument("--kind", required=True, choices=sorted(FIGURE_KINDS))
    p.add_argument(
        "--in",
        dest="inputs",
        action="append",
        required=True,
        metavar="CSV",
        help="input CSV path (repeatable; the first is the primary input)",
    )
    p.add_argument("--out", required=True, help="output image path (.png, .pdf or .svg)")
    p.add_argument("--hull", help="hull geometry text file, required for hull_overlay")
    p.add_argument(
        "--region",
        help="ground-truth outline to draw on hull_overlay; defaults to the "
        "region recorded in the points manifest next to the CSV",
    )
    p.add_argument("--ycol", help="RMSE column to plot for rmse_vs_n / rmse_vs_r")
    p.add_argument("--logx", action="store_true", help="log-scale x axis")
    p.add_argument("--logy", action="store_true", help="log-scale y axis")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        spec = PlotSpec(
            kind=args.kind,
            inputs=tuple(args.inputs),
            out=args.out,
            logx=args.logx,
            logy=args.logy,
            hull=args.hull,
            region=args.region,
            ycol=args.ycol,
        )
        render(spec)
    except PlotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
