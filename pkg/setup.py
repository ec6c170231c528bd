"""Build script: compiles the optional Cython kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed compile only costs speed, not correctness.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [Extension("superweil._kernel", ["src/superweil/_kernel.pyx"])],
        language_level=3,
    )
except Exception as exc:  # missing Cython or no C toolchain
    print(f"superweil: skipping compiled kernel ({exc}); pure-Python fallback will be used")

setup(ext_modules=ext_modules)
