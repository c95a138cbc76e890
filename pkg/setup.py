"""Build script for the optional compiled CTC kernels.

The package is fully functional without the extension (a numpy fallback is
selected at import time); any build failure therefore only costs speed.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the Cython kernels if possible, otherwise install pure-Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler or Cython missing
            print(f"warning: skipping compiled kernels ({exc}); "
                  f"falling back to pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: failed to build {ext.name} ({exc}); "
                  f"falling back to pure Python")


def extensions():
    import os

    pyx = "src/koasr/_kernels/_ctc_cy.pyx"
    if not os.path.exists(pyx):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize([Extension("koasr._kernels._ctc_cy", [pyx])],
                     language_level=3)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
