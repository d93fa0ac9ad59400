"""Build script. The compiled kernel extension is optional: if Cython or a C
compiler is unavailable the package installs anyway and falls back to the
pure-Python kernels at import time."""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing entirely
            print(f"warning: skipping compiled kernels ({exc})")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "the pure-Python kernels will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        print("warning: Cython not installed; building without compiled kernels")
        return []
    return cythonize(
        [Extension("hklattice._speedups", ["src/hklattice/_speedups.pyx"])],
        language_level=3,
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
