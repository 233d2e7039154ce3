"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (pure-Python kernels are the
fallback), so any compilation failure downgrades to a warning.
"""

import warnings

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/gamma_envelope/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    warnings.warn("Cython unavailable, using pure-Python kernels: %s" % exc)

setup(ext_modules=ext_modules)
