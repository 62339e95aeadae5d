import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("KDEP_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("kdep._ckernel", ["src/kdep/_ckernel.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # The package still works on the pure-Python kernel.
        ext_modules = []

setup(ext_modules=ext_modules)
