"""Build script for the optional compiled tokenizer core.

The extension is marked optional: if no C toolchain (or Cython) is present
the install still succeeds and the package falls back to the pure-Python
scanner at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext = Extension(
        "labelsmith.highlight._scanner",
        ["src/labelsmith/highlight/_scanner.pyx"],
        optional=True,
    )
    ext_modules = cythonize([ext], language_level="3")

setup(ext_modules=ext_modules)
