"""Build hook: compile the optional distance-search kernel if Cython is available.

The package is pure Python; `floqtess._distkernel` is a drop-in accelerator for
the exact-distance inner loop.  Any failure here (no Cython, no C compiler)
falls back to a pure-Python build with identical behaviour.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/floqtess/_distkernel.pyx"],
        language_level=3,
        quiet=True,
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
