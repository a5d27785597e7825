"""Builds the _skeincore extension by delegating to the CMake project."""

import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        out = Path(self.get_ext_fullpath(ext.name)).resolve()
        out.parent.mkdir(parents=True, exist_ok=True)
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DPython3_EXECUTABLE={sys.executable}",
                "-DSKEINCORE_BUILD_TESTS=OFF",
                "-DCMAKE_BUILD_TYPE=Release",
                f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={out.parent}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_skeincore", "-j"],
            cwd=build_dir,
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("skeincore._skeincore")],
    cmdclass={"build_ext": CMakeBuild},
)
