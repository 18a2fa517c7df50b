"""Build script: compiles the counting kernel when Cython and a C compiler
are available; the package falls back to the pure-Python kernel otherwise."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("subsemi._fastcount", ["src/subsemi/_fastcount.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": 3},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
