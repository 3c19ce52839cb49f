"""Build the optional compiled factorization kernel.

The package works without it: ``wittenlab.hurwitz.kernel`` falls back to a
pure-Python implementation when the extension is missing.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("WITTENLAB_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "wittenlab.hurwitz._kernel",
                    ["src/wittenlab/hurwitz/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
