"""Build script: compiles the optional row-reduction kernel.

The package is fully functional without the extension (a pure-Python twin is
selected at import time), so any failure to build it is downgraded to a
warning instead of aborting the install.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
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
            f"warning: compiled kernel skipped ({exc}); "
            "the pure-Python fallback will be used",
            file=sys.stderr,
        )


ext_modules = []
if os.environ.get("ARRPOIN_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("arrpoin._rowred", ["src/arrpoin/_rowred.pyx"])],
            language_level=3,
        )
    except ImportError:
        print("warning: Cython not found, building without the compiled kernel",
              file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
