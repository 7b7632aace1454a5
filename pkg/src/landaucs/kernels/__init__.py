"""Kernel backend selection.

The hot grid-evaluation loops exist twice: a compiled Cython extension
(_fast) and a NumPy fallback (reference).  The extension is preferred when
importable; LANDAUCS_KERNELS=numpy forces the fallback.  Both expose the
same functions, so everything above this package is backend-agnostic.
"""

import os

from . import reference

_BACKENDS = {"numpy": reference}
try:  # pragma: no cover - depends on the build
    from . import _fast
    _BACKENDS["cython"] = _fast
except ImportError:
    _fast = None

_forced = os.environ.get("LANDAUCS_KERNELS", "").strip().lower()
if _forced:
    if _forced not in _BACKENDS:
        raise ImportError(
            f"LANDAUCS_KERNELS={_forced!r} requested but only "
            f"{sorted(_BACKENDS)} are available")
    _active = _BACKENDS[_forced]
else:
    _active = _BACKENDS.get("cython", reference)

cs2d_fields = _active.cs2d_fields
su11_fields = _active.su11_fields
tail_terms = reference.tail_terms


def active_backend():
    """Name of the backend the module-level kernels are bound to."""
    return _active.BACKEND_NAME


def available_backends():
    return sorted(_BACKENDS)


def get_backend(name):
    """Fetch a specific backend module (for tests and benchmarks)."""
    return _BACKENDS[name]
