"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed Cython build only costs speed.
"""

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    extensions = cythonize(
        [
            Extension(
                "condensedly.kernels._speedups",
                ["src/condensedly/kernels/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
