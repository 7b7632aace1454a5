"""Figure rendering for landaucs CSV/JSON outputs."""

from .io import DensityData, ScanData, SchemaError, read_density_csv, read_meta, read_scan_csv
from .render import PlotJob, RenderResult, render_density, render_energy

__version__ = "0.1.0"

__all__ = [
    "DensityData",
    "ScanData",
    "SchemaError",
    "PlotJob",
    "RenderResult",
    "read_density_csv",
    "read_meta",
    "read_scan_csv",
    "render_density",
    "render_energy",
    "__version__",
]
