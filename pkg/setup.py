import os

from setuptools import setup

ext_modules = []
if os.environ.get("QCAP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("qcap._linalg_cy", ["src/qcap/_linalg_cy.pyx"])],
            language_level=3,
        )
    except ImportError:
        # Pure-Python fallback is selected at import time; the compiled
        # kernel is an optional accelerator.
        ext_modules = []

setup(ext_modules=ext_modules)
