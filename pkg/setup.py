from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("blockprim._kernel._ckernel", ["src/blockprim/_kernel/_ckernel.pyx"]),
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
