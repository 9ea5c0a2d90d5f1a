"""Build hook: compile the optional C kernel extension when Cython is present.

The package is fully functional without the extension; toruscert._speedups
falls back to the pure-Python twins in toruscert._kernels_py at import time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("TORUSCERT_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "toruscert._kernels",
                    sources=["src/toruscert/_kernels.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
