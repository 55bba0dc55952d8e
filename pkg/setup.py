from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("termalg._kernels", ["src/termalg/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # no Cython: install with the pure-Python kernels only
    ext_modules = []

setup(ext_modules=ext_modules)
