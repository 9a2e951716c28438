"""Build script: compiles the optional fast kernels.

The package works without the extension (a pure numpy implementation is
selected at import time); building it just makes the eigensolver kernels
much faster.  `pip install -e . --no-build-isolation` compiles it when
Cython and a C compiler are present.
"""

from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rlinspec.numerics._kernels_cy",
                ["src/rlinspec/numerics/_kernels_cy.pyx"],
                include_dirs=[np.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
