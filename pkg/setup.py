"""Build script: compiles the optional fast kernel extension.

The package works without the extension (pure-Python kernels are selected at
import time), so environments lacking a C toolchain can still install with
``pip install . --config-settings=--global-option=--no-ext`` or by letting the
build fail soft via ``TURAN3_SKIP_EXT=1``.
"""

import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("TURAN3_SKIP_EXT"):
        return []
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "turan3._fastcore",
        ["src/turan3/_fastcore.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
