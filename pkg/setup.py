import os

from setuptools import setup

ext_modules = []
if not os.environ.get("DEDEZETA_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/dedezeta/_speedups.pyx"],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback keeps the package fully functional.
        ext_modules = []

setup(ext_modules=ext_modules)
