"""Optional compiled kernel; the package works without it."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/monoclinic/_kernels.pyx"], language_level=3, quiet=True)
    for ext in ext_modules:
        ext.optional = True  # fall back to pure Python if the compiler fails
except ImportError:
    pass

setup(ext_modules=ext_modules)
