"""Build script: compiles the optional accelerator extension when Cython is available.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any failure here downgrades to a pure-Python
install instead of aborting.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("vacphase._kernels", ["src/vacphase/_kernels.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    sys.stderr.write(
        "vacphase: skipping compiled kernels (%s); pure-Python fallback will be used\n" % exc
    )

setup(ext_modules=ext_modules)
