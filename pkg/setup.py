from setuptools import setup, Extension

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("coinmard._gram", ["src/coinmard/_gram.pyx"])],
        language_level=3,
    )
except ImportError:
    # no Cython: the pure-Python kernel is used instead
    ext_modules = []

setup(ext_modules=ext_modules)
