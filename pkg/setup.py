"""Build script: compiles the optional accelerator extension when Cython and a
C toolchain are available.  The package is fully functional without it (a pure
NumPy implementation of the same kernels is selected at import time)."""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FRACDYN_PURE"):
    try:
        import numpy as np
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fracdyn._l1core",
                    ["src/fracdyn/_l1core.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
