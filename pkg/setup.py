from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("reflectpath._kernel_c", ["src/reflectpath/_kernel_c.pyx"]),
]

setup(ext_modules=cythonize(extensions, language_level=3))
