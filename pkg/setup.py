"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the build therefore tolerates a
missing or failing Cython toolchain.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/kbalance/_speedups.pyx"],
        language_level=3,
    )
except Exception as exc:  # noqa: BLE001 - any build problem degrades to pure Python
    import sys

    print(f"kbalance: building without compiled kernels ({exc})", file=sys.stderr)
    ext_modules = []

setup(ext_modules=ext_modules)
