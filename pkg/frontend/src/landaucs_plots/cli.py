"""Command-line entry for batch figure rendering.

    landaucs-plots density run.csv [--meta run.meta.json] --out run.png
    landaucs-plots energy scan.csv --out scan.png

Sidecar metadata is discovered automatically when the file
`<csv stem>.meta.json` exists next to the input.
"""

import argparse
import pathlib
import sys

from .io import SchemaError
from .render import PlotJob, render_density, render_energy


def _job_from_args(args):
    meta = args.meta
    if meta is None and not args.no_meta:
        stem = args.csv[:-4] if args.csv.endswith(".csv") else args.csv
        sidecar = pathlib.Path(stem + ".meta.json")
        if sidecar.exists():
            meta = str(sidecar)
    out = args.out
    if out is None:
        out = str(pathlib.Path(args.csv).with_suffix(".png"))
    return PlotJob(csv_path=args.csv, out_path=out, meta_path=meta,
                   cmap=args.cmap, overlay=not args.no_overlay, dpi=args.dpi)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="landaucs-plots",
        description="render landaucs CSV/JSON outputs into figures")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("density", help="heatmap with orbit overlay")
    d.add_argument("csv")
    d.add_argument("--meta", help="metadata sidecar (default: auto-discover)")
    d.add_argument("--no-meta", action="store_true",
                   help="ignore any sidecar and render the bare heatmap")
    d.add_argument("--out", help="output image (default: csv with .png)")
    d.add_argument("--cmap", default="viridis")
    d.add_argument("--no-overlay", action="store_true")
    d.add_argument("--dpi", type=int, default=150)
    d.set_defaults(func=render_density)

    e = sub.add_parser("energy", help="mean-energy curves")
    e.add_argument("csv")
    e.add_argument("--out")
    e.add_argument("--cmap", default="viridis")
    e.add_argument("--dpi", type=int, default=150)
    e.set_defaults(func=render_energy, meta=None, no_meta=True,
                   no_overlay=True)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = args.func(_job_from_args(args))
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {result.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
