"""Landau levels and coherent states of anisotropic 2D Dirac fermions in
a perpendicular magnetic field (symmetric gauge).

Submodules: special (special functions), model (parameters, coordinates,
spectrum, classical orbit), fock (scalar eigenfunctions and ladder
operators), spinors (two-component states), matrix_ops (dressed operator
algebra), coherent (the two coherent-state families), observables
(densities and mean energies), verify (completeness and moment checks),
kernels (grid-evaluation backends) and cli.
"""

from .model import ModelParams, PlanePoint, classical_ellipse, energy_level
from .coherent import CS2DSpec, SU11Spec
from .observables import GridSpec, density_grid, mean_energy_2d, mean_energy_su11
from .special import SeriesControl

__version__ = "0.1.0"

__all__ = [
    "ModelParams",
    "PlanePoint",
    "CS2DSpec",
    "SU11Spec",
    "GridSpec",
    "SeriesControl",
    "classical_ellipse",
    "energy_level",
    "density_grid",
    "mean_energy_2d",
    "mean_energy_su11",
    "__version__",
]
