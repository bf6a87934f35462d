import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("INDEPLIB_NO_EXT"):
    ext = Extension(
        "indeplib.kernels._ckernels",
        ["src/indeplib/kernels/_ckernels.pyx"],
        extra_compile_args=["-O2"],
    )
    # Pure-Python fallback is selected at import time, so a failed build
    # only costs speed, never functionality.
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)

setup(ext_modules=ext_modules)
