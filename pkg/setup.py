"""Build glue for the optional compiled digit-loop extension.

The package is pure Python plus one accelerator module; if Cython or a C
compiler is unavailable the install falls back to the pure backend.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Treat extension build failures as a soft miss, not an install error."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping compiled kernels ({exc}); pure backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); pure backend will be used")


ext_modules = []
if os.environ.get("QADIC_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("qadic._native", ["src/qadic/_native.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        print("warning: Cython not available; pure backend will be used")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
