import os

from setuptools import Extension, setup

# The compiled kernels are an optional accelerator: the package falls back to
# euclid_kit._purepy when the extension is absent (EUCLID_KIT_NO_EXT=1 skips
# the build entirely).
ext_modules = []
if not os.environ.get("EUCLID_KIT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("euclid_kit._core", ["src/euclid_kit/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
