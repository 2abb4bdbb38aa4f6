import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("BFFORMS_SKIP_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "bfforms._kernels",
                    ["src/bfforms/_kernels.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: install runs pure-Python kernels only.
        ext_modules = []

setup(ext_modules=ext_modules)
