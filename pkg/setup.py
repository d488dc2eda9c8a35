"""Optional compiled-kernel build.

The package is pure Python by default.  When Cython and a C compiler are
available, `python setup.py build_ext --inplace` (or a normal pip install
with the `speed` extra) compiles the hot-kernel twin in
src/vertexmagic/kernels/_ck.pyx; the package picks it up at import time
and falls back to the pure-Python kernels otherwise.
"""

import os

from setuptools import setup

PYX = "src/vertexmagic/kernels/_ck.pyx"

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize([PYX], language_level=3)
    except ImportError:
        pass

setup(ext_modules=ext_modules)
