"""Build script: compiles the optional Cython core.

The package works without the extension (pure-Python fallback selected at
import time), so any failure here is non-fatal for functionality, only for
speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "edgealg._core",
                ["src/edgealg/_core.pyx"],
                language="c++",
                extra_compile_args=["-O3", "-std=c++17"],
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
