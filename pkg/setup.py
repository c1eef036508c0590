"""Build script: compiles the optional speed kernel when Cython is available.

Without Cython (or without a C compiler) the package still installs; the
pure-Python kernel in qslt._speed_fallback is selected at import time.
"""

import importlib.util

from setuptools import Extension, setup

ext_modules = []
if importlib.util.find_spec("Cython") is not None:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qslt._speed_kernel", ["src/qslt/_speed_kernel.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
