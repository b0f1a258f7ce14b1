from setuptools import Extension, setup

# The compiled word-enumeration kernel is an optional speedup.  Without
# Cython (or if the build fails) the package falls back to the pure-Python
# kernel in orbigeo._wordkernel_py at import time.
ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "orbigeo._wordkernel",
                ["src/orbigeo/_wordkernel.pyx"],
                include_dirs=[numpy.get_include()],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
