import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FMCOLOR_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fmcolor._kernel._compiled",
                    ["src/fmcolor/_kernel/_compiled.pyx"],
                    extra_compile_args=["-O2"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: the pure-Python kernel is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
