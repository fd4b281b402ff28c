"""Build script: compiles the optional C extension for the hot kernels.

The package works without the extension (a pure-Python fallback is
selected at import time), so a failed compile is downgraded to a warning.
"""

import sys

from setuptools import setup
from setuptools.errors import CCompilerError, ExecError, PlatformError


def extensions():
    from Cython.Build import cythonize

    return cythonize(
        ["src/blowup/_ckernels.pyx"],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )


try:
    setup(ext_modules=extensions())
except (CCompilerError, ExecError, PlatformError, ImportError) as exc:
    sys.stderr.write(
        f"warning: C kernel build failed ({exc!r}); "
        "installing with the pure-Python fallback\n"
    )
    setup()
