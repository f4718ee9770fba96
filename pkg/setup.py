"""Build glue for the optional compiled kernel.

The package is pure Python plus one Cython extension mirroring
coterie._kernels_py. If the extension cannot be built the install still
succeeds and the pure kernels are used.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler and friends
            print(f"warning: compiled kernels skipped ({exc}); pure Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: compiled kernels skipped ({exc}); pure Python fallback will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    return cythonize(
        [Extension("coterie._kernels_cy", ["src/coterie/_kernels_cy.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": optional_build_ext})
