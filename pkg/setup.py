from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install; narydiff.kernels falls back to the Python kernels.
    extensions = []
else:
    extensions = cythonize(
        [Extension("narydiff._kernels", ["src/narydiff/_kernels.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=extensions)
