"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension; wsbound.kernels
falls back to a pure-Python implementation at import time.  Building is
therefore best-effort: if Cython or a C compiler is unavailable the
install proceeds without compiled kernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "wsbound._kernels_cy",
                ["src/wsbound/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
