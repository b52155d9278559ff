"""Build script: compiles the optional exact-arithmetic speedup extension.

The package is fully functional without the extension; duflo.kernels falls
back to the pure-Python implementation when the compiled module is absent.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    extensions = cythonize(
        [
            Extension(
                "duflo._speedups",
                ["src/duflo/_speedups.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
