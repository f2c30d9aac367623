"""Build script for the compiled propagation core.

The package works without the extension (a pure Python engine is selected
at import time), but the compiled core is what makes the exhaustive
verification suites fast.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "powerdom._core",
                ["src/powerdom/_core.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
