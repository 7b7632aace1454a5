"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so a failed compile only costs speed, not functionality.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "landaucs.kernels._fast",
                ["src/landaucs/kernels/_fast.pyx"],
                include_dirs=[numpy.get_include()],
                # -fcx-limited-range: naive complex arithmetic (no __muldc3
                # libcalls); the kernels rescale before anything overflows
                extra_compile_args=["-O3", "-fcx-limited-range",
                                    "-fno-math-errno"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: Cython kernel extension not built ({exc}); "
          "falling back to the NumPy kernels", file=sys.stderr)

setup(ext_modules=ext_modules)
