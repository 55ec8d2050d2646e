"""Build script for the optional compiled window kernel.

The package is fully functional without the extension; if Cython or a C
compiler is unavailable the build falls back to the pure-NumPy kernel
selected at import time.
"""
import sys

from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Let the install succeed even when the extension cannot be compiled."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernel skipped ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: building {ext.name} failed ({exc}); "
                  "the pure-NumPy kernel will be used", file=sys.stderr)


try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        ["src/trendvol/_native.pyx"],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
