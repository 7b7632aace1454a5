"""Figure rendering: density heatmaps with orbit overlays, energy curves."""

import math
import warnings
from dataclasses import dataclass

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from .io import read_density_csv, read_meta, read_scan_csv

ELLIPSE_SAMPLES = 720


@dataclass
class PlotJob:
    csv_path: str
    out_path: str
    meta_path: str | None = None
    cmap: str = "viridis"
    overlay: bool = True
    dpi: int = 150


@dataclass
class RenderResult:
    """What was drawn, for callers and tests; no numeric data is altered."""

    out_path: str
    kind: str
    peak: dict | None = None
    ellipse_xy: np.ndarray | None = None
    curves: dict | None = None


def ellipse_curve(ellipse, samples=ELLIPSE_SAMPLES):
    t = np.linspace(0.0, 2.0 * math.pi, samples)
    return np.column_stack((
        ellipse["center_x"] + ellipse["semi_axis_x"] * np.cos(t),
        ellipse["center_y"] + ellipse["semi_axis_y"] * np.sin(t),
    ))


def _state_title(meta):
    cfg = meta.get("config", {})
    kind = cfg.get("kind")
    if kind == "2d":
        a = cfg.get("alpha", [0, 0])
        b = cfg.get("beta", [0, 0])
        return (f"2D state  alpha={a[0]:g}{a[1]:+g}i  beta={b[0]:g}{b[1]:+g}i  "
                f"zeta={cfg.get('zeta'):g}  omega_b={cfg.get('omega_b'):g}")
    if kind == "su11":
        t = cfg.get("tau", [0, 0])
        return (f"su(1,1) state  tau={t[0]:g}{t[1]:+g}i  m_z={cfg.get('m_z')}  "
                f"zeta={cfg.get('zeta'):g}  omega_b={cfg.get('omega_b'):g}")
    return ""


def render_density(job: PlotJob) -> RenderResult:
    """Heatmap of the density grid, orbit overlay and peak marker.

    The overlay is drawn only when metadata with ellipse parameters is
    available; a missing sidecar degrades to a bare heatmap with a
    warning.  A metadata schema mismatch is an error.
    """
    data = read_density_csv(job.csv_path)
    meta = None
    if job.meta_path is not None:
        meta = read_meta(job.meta_path)
    else:
        warnings.warn("no metadata sidecar given: rendering without overlay")

    fig, ax = plt.subplots(figsize=(7.0, 5.6))
    im = ax.imshow(data.rho, origin="lower", extent=data.extent,
                   cmap=job.cmap, aspect="equal", interpolation="nearest")
    fig.colorbar(im, ax=ax, label="probability density")
    ax.set_xlabel("x")
    ax.set_ylabel("y")

    result = RenderResult(out_path=job.out_path, kind="density")
    if meta is not None:
        ax.set_title(_state_title(meta), fontsize=9)
        peak = meta.get("peak")
        if peak is not None:
            ax.plot([peak["x"]], [peak["y"]], marker="x", ms=9, mew=2.0,
                    color="white", zorder=4)
            result.peak = peak
        ellipse = meta.get("ellipse")
        if job.overlay and ellipse is not None:
            xy = ellipse_curve(ellipse)
            ax.plot(xy[:, 0], xy[:, 1], color="red", lw=1.4, zorder=3)
            result.ellipse_xy = xy
    fig.savefig(job.out_path, dpi=job.dpi, bbox_inches="tight")
    plt.close(fig)
    return result


def render_energy(job: PlotJob) -> RenderResult:
    """One line per scan column, labeled by its header name."""
    data = read_scan_csv(job.csv_path)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for name, values in data.columns.items():
        label = name if name != "value" else None
        ax.plot(data.param, values, lw=1.6, label=label)
    ax.set_xlabel("|eigenvalue|")
    ax.set_ylabel(r"mean energy  [$\hbar v'_F$]")
    ax.grid(alpha=0.3)
    if len(data.columns) > 1 or "value" not in data.columns:
        ax.legend(fontsize=8)
    fig.savefig(job.out_path, dpi=job.dpi, bbox_inches="tight")
    plt.close(fig)
    return RenderResult(out_path=job.out_path, kind="energy",
                        curves=dict(data.columns), peak=None)
