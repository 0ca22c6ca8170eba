import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# The compiled kernel is optional: without Cython the package installs
# pure-Python and hanoihash._kernels falls back to the numpy implementation.
extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "hanoihash._kernels._walkcore",
                ["src/hanoihash/_kernels/_walkcore.pyx"],
                include_dirs=[np.get_include()],
                # -ffp-contract=off keeps the kernel bit-identical to the
                # numpy fallback (no FMA contraction of the coin multiply).
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
