"""Build the optional compiled kernel extension.

The package is fully functional without the extension (a numpy fallback is
selected at import time); the extension accelerates the pair-sum sweeps and
the Hardy Z evaluations used for zero computation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("zetapair._kernels", ["src/zetapair/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
