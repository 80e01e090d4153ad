"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: ``nclgraph._kernels``
falls back to the pure-Python implementations when the compiled module is
missing, so a failed extension build only costs speed, never correctness.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: building nclgraph._kernels._speedups failed ({exc}); "
            "installing with the pure-Python kernels only.",
            file=sys.stderr,
        )


def _extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; skipping the compiled kernels.",
            file=sys.stderr,
        )
        return []
    ext = Extension(
        "nclgraph._kernels._speedups",
        ["src/nclgraph/_kernels/_speedups.pyx"],
    )
    return cythonize(
        [ext],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )


setup(ext_modules=_extensions(), cmdclass={"build_ext": OptionalBuildExt})
