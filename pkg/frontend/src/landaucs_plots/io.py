"""Readers for the landaucs CLI file contract.

Density grids: CSV with header x,y,rho,re_up,im_up,re_lo,im_lo, one row
per node with y as the outer loop, plus a .meta.json sidecar carrying
schema_version, the resolved configuration, the peak cell and (for 2D
states) the classical-ellipse parameters.  Energy scans: CSV with a
`param` column followed by one value column per curve.

This package only reads those formats; it never recomputes physics.
"""

import csv
import json
from dataclasses import dataclass, field

import numpy as np

SUPPORTED_SCHEMA = 1

DENSITY_HEADER = ["x", "y", "rho", "re_up", "im_up", "re_lo", "im_lo"]


class SchemaError(RuntimeError):
    """Metadata schema version is not one this renderer understands."""

    def __init__(self, found):
        super().__init__(
            f"unsupported metadata schema: expected {SUPPORTED_SCHEMA}, "
            f"found {found}")
        self.expected = SUPPORTED_SCHEMA
        self.found = found


@dataclass
class DensityData:
    """A density grid rebuilt from the CSV node list."""

    x: np.ndarray          # nx node positions (cell centers)
    y: np.ndarray          # ny node positions
    rho: np.ndarray        # (ny, nx), row iy holds y = y[iy]
    meta: dict | None = None

    @property
    def extent(self):
        dx = self.x[1] - self.x[0]
        dy = self.y[1] - self.y[0]
        return (self.x[0] - 0.5 * dx, self.x[-1] + 0.5 * dx,
                self.y[0] - 0.5 * dy, self.y[-1] + 0.5 * dy)


@dataclass
class ScanData:
    param: np.ndarray
    columns: dict = field(default_factory=dict)  # name -> values
    meta: dict | None = None


def read_density_csv(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != DENSITY_HEADER:
            raise ValueError(f"unexpected density header {header!r} in {path}")
        rows = np.array([[float(v) for v in row] for row in reader])
    if rows.size == 0:
        raise ValueError(f"density file {path} has no data rows")
    xs = np.unique(rows[:, 0])
    ys = np.unique(rows[:, 1])
    nx, ny = len(xs), len(ys)
    if nx * ny != len(rows):
        raise ValueError(
            f"{path}: {len(rows)} rows do not fill a {nx} x {ny} grid")
    # rows come y-outer: consecutive blocks of nx share one y
    rho = rows[:, 2].reshape(ny, nx)
    return DensityData(x=xs, y=ys, rho=rho)


def read_meta(path):
    with open(path) as fh:
        meta = json.load(fh)
    version = meta.get("schema_version")
    if version != SUPPORTED_SCHEMA:
        raise SchemaError(version)
    return meta


def read_scan_csv(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if not header or header[0] != "param" or len(header) < 2:
            raise ValueError(f"unexpected scan header {header!r} in {path}")
        rows = np.array([[float(v) for v in row] for row in reader])
    if rows.ndim != 2 or rows.shape[0] < 2:
        raise ValueError(
            f"scan file {path} needs at least two rows to draw a curve")
    columns = {name: rows[:, i + 1] for i, name in enumerate(header[1:])}
    return ScanData(param=rows[:, 0], columns=columns)
