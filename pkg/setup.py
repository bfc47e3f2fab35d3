"""Build script: compiles the optional accelerator extension.

The package works without the extension (a pure-Python backend is selected
at import time), so any failure to build it is downgraded to a warning.
Set STEINITZCALC_NO_EXTENSION=1 to skip the build entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(
            f"WARNING: building the accelerator extension failed ({exc!r}); "
            "falling back to the pure-Python kernels.",
            file=sys.stderr,
        )


def extensions():
    if os.environ.get("STEINITZCALC_NO_EXTENSION"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        print(
            "WARNING: Cython not available; installing without the "
            "accelerator extension.",
            file=sys.stderr,
        )
        return []
    return cythonize(
        [
            Extension(
                "steinitzcalc._kernels._speedups",
                ["src/steinitzcalc/_kernels/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
