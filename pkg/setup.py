"""Build script for the compiled enumeration kernels.

The extension is optional: if Cython (or a C compiler) is unavailable the
package installs without it and falls back to the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "cftkit._kernels._fast",
                ["src/cftkit/_kernels/_fast.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
