"""Build script: compiles the optional _speedups extension.

The package is pure Python; the extension only accelerates hot kernels
(cyclotomic coefficient convolution, mod-p elimination).  If Cython or a C
compiler is unavailable the build falls back to the pure implementation
selected at import time by taftdouble.kernels.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing: pure fallback still works
            print(f"warning: skipping _speedups extension build: {exc}", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: skipping {ext.name}: {exc}", file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [
            Extension(
                "taftdouble._speedups",
                ["src/taftdouble/_speedups.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
