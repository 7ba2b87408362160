"""Build script: compiles the optional search-kernel extension.

The package works without the extension (a pure-Python twin is selected at
import time); compiling it makes the exhaustive sweeps roughly two orders of
magnitude faster.  `optional=True` keeps installation alive on hosts without
a C toolchain.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "ringlab._kernels",
            ["src/ringlab/_kernels.pyx"],
            extra_compile_args=["-O2"],
        )
    ]
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

for ext in ext_modules:
    ext.optional = True

setup(ext_modules=ext_modules)
