"""Build script for the optional compiled kernel.

The package is pure Python except for ``dedsum._kernel``, a small Cython
extension holding the hot loops of the pair search.  If Cython or a C
compiler is unavailable the install still succeeds and the pure-Python
kernel is selected at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("dedsum._kernel", ["src/dedsum/_kernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
